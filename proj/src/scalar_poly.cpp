#include "monoclif/scalar_poly.hpp"

#include <sstream>

namespace monoclif {

ScalarPoly::ScalarPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ScalarPoly ScalarPoly::monomial(int k, Rational c) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = std::move(c);
    return ScalarPoly(std::move(v));
}

Rational ScalarPoly::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ScalarPoly(std::move(out));
}

ScalarPoly ScalarPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    ScalarPoly p = *this;
    for (auto& t : p.coeffs_) t *= c;
    return p;
}

ScalarPoly ScalarPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return ScalarPoly(std::move(out));
}

Rational ScalarPoly::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

void ScalarPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string ScalarPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i].str();
        if (i >= 1) os << "*t";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

} // namespace monoclif
