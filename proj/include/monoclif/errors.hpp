#pragma once

#include <stdexcept>

namespace monoclif {

// Raised when textual or JSON input cannot be turned into a value.
// Precondition violations use std::invalid_argument / std::domain_error;
// internal invariant failures use std::logic_error.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace monoclif
