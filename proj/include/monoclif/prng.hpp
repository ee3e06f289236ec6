#pragma once

#include <cstdint>

#include "monoclif/rational.hpp"

namespace monoclif {

/// splitmix64: tiny, fully deterministic across platforms. The verification
/// suites must reproduce byte-identical case streams from a seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (next() & 1) != 0; }

    /// Small rational in [-max_num, max_num] / {1..max_den}, possibly zero.
    Rational small_rational(int max_num = 3, int max_den = 2) {
        return Rational(uniform(-max_num, max_num), uniform(1, max_den));
    }

    CRational small_crational(bool allow_imaginary = true) {
        Rational re = small_rational();
        Rational im = allow_imaginary && coin() ? small_rational() : Rational(0);
        return {re, im};
    }

  private:
    std::uint64_t state_;
};

} // namespace monoclif
