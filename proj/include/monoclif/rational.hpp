#pragma once

#include <gmpxx.h>

#include <string>

#include "monoclif/errors.hpp"

namespace monoclif {

/// Exact rational scalar. Canonical form throughout: reduced fraction,
/// denominator > 0. Every coefficient in the library is built from these;
/// there is no floating point anywhere.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT: implicit on purpose
    Rational(long num, long den);

    /// Accepts "p" or "p/q" with optional sign; q must be nonzero.
    static Rational from_string(const std::string& s);

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws std::domain_error on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const;
    Rational abs() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// Always "p/q", including "p/1"; this is the serialized form.
    std::string str() const;

  private:
    mpq_class q_;
};

Rational pow(const Rational& base, unsigned e);
Rational factorial(unsigned n);
/// n!! with the empty-product conventions (-1)!! = 0!! = 1.
Rational double_factorial(int n);

/// Complex rational a + bi; the scalar field of the complexified algebra.
struct CRational {
    Rational re;
    Rational im;

    CRational() = default;
    CRational(Rational r) : re(std::move(r)) {} // NOLINT
    CRational(long n) : re(n) {}                // NOLINT
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    CRational conj() const { return {re, -im}; }

    CRational operator-() const { return {-re, -im}; }
    CRational& operator+=(const CRational& o);
    CRational& operator-=(const CRational& o);
    CRational& operator*=(const CRational& o);

    friend CRational operator+(CRational a, const CRational& b) { return a += b; }
    friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
    friend CRational operator*(CRational a, const CRational& b) { return a *= b; }

    friend bool operator==(const CRational& a, const CRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }

    std::string str() const;
};

} // namespace monoclif
