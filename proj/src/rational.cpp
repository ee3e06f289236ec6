#include "monoclif/rational.hpp"

#include <stdexcept>

namespace monoclif {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
        mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
        if (den == 0) throw ParseError("Rational: zero denominator in '" + s + "'");
        Rational r;
        r.q_ = mpq_class(num) / mpq_class(den);
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("Rational: cannot parse '" + s + "'");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational pow(const Rational& base, unsigned e) {
    Rational acc = 1;
    for (unsigned i = 0; i < e; ++i) acc *= base;
    return acc;
}

Rational factorial(unsigned n) {
    Rational acc = 1;
    for (unsigned i = 2; i <= n; ++i) acc *= Rational(static_cast<long>(i));
    return acc;
}

Rational double_factorial(int n) {
    if (n <= 0) return 1;
    Rational acc = 1;
    for (int i = n; i >= 2; i -= 2) acc *= Rational(i);
    return acc;
}

CRational& CRational::operator+=(const CRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

CRational& CRational::operator-=(const CRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

CRational& CRational::operator*=(const CRational& o) {
    const Rational nre = re * o.re - im * o.im;
    const Rational nim = re * o.im + im * o.re;
    re = nre;
    im = nim;
    return *this;
}

std::string CRational::str() const {
    if (im.is_zero()) return re.str();
    return "(" + re.str() + (im.sign() < 0 ? "-" : "+") + im.abs().str() + "i)";
}

} // namespace monoclif
