#pragma once

#include <string>
#include <vector>

#include "monoclif/rational.hpp"

namespace monoclif {

/// Dense one-variable polynomial over the rationals; coefficient i is the
/// coefficient of t^i. Used for the scalar Hermite and Gegenbauer families
/// and the one-variable transform checks.
class ScalarPoly {
  public:
    ScalarPoly() = default;
    explicit ScalarPoly(std::vector<Rational> coeffs);
    static ScalarPoly monomial(int k, Rational c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(int i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);

    ScalarPoly scaled(const Rational& c) const;
    ScalarPoly derivative() const;
    Rational evaluate(const Rational& t) const;

    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const ScalarPoly& a, const ScalarPoly& b) { return !(a == b); }

    std::string str() const;

  private:
    std::vector<Rational> coeffs_; // trailing zeros trimmed; empty == 0

    void trim();
};

} // namespace monoclif
