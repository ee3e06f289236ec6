#include "monoclif/calculus.hpp"

#include <stdexcept>

namespace monoclif {

CliffPoly dirac_left(const CliffPoly& p) {
    const int m = p.dimension();
    CliffPoly out(m, p.role());
    for (int j = 1; j <= m; ++j)
        out += p.derivative(j).mul_left(MultiVector::generator(m, j));
    return out;
}

BiPoly dirac_left(const BiPoly& p, Slot slot) {
    const int m = p.dimension();
    BiPoly out(m, p.role(Slot::First), p.role(Slot::Second));
    for (int j = 1; j <= m; ++j) {
        const BiPoly d = p.derivative(slot, j);
        for (const auto& [key, c] : d.terms())
            out.add_term(key, MultiVector::generator(m, j) * c);
    }
    return out;
}

CliffPoly dirac_right(const CliffPoly& p) {
    const int m = p.dimension();
    CliffPoly out(m, p.role());
    for (int j = 1; j <= m; ++j)
        out += p.derivative(j).mul_right(MultiVector::generator(m, j));
    return out;
}

BiPoly dirac_right(const BiPoly& p, Slot slot) {
    const int m = p.dimension();
    BiPoly out(m, p.role(Slot::First), p.role(Slot::Second));
    for (int j = 1; j <= m; ++j) {
        const BiPoly d = p.derivative(slot, j);
        for (const auto& [key, c] : d.terms())
            out.add_term(key, c * MultiVector::generator(m, j));
    }
    return out;
}

CliffPoly laplacian(const CliffPoly& p) {
    const int m = p.dimension();
    CliffPoly out(m, p.role());
    for (int j = 1; j <= m; ++j) out += p.derivative(j).derivative(j);
    return out;
}

BiPoly laplacian(const BiPoly& p, Slot slot) {
    const int m = p.dimension();
    BiPoly out(m, p.role(Slot::First), p.role(Slot::Second));
    for (int j = 1; j <= m; ++j) out += p.derivative(slot, j).derivative(slot, j);
    return out;
}

std::optional<int> euler_degree(const CliffPoly& p) {
    if (p.is_zero()) return 0;
    int deg = -1;
    for (const auto& [mono, c] : p.terms()) {
        const int d = mono.degree();
        if (deg == -1) deg = d;
        if (d != deg) return std::nullopt;
    }
    return deg;
}

bool is_monogenic(const CliffPoly& p) { return dirac_left(p).is_zero(); }

GaussianSection::GaussianSection(CliffPoly p, Rational c)
    : poly(std::move(p)), weight_c(std::move(c)) {
    if (weight_c.sign() <= 0)
        throw std::invalid_argument("GaussianSection: weight must be positive");
}

GaussianSection weighted_dirac(const GaussianSection& g) {
    const Rational two_c = g.weight_c * Rational(2);
    CliffPoly next = dirac_left(g.poly) - vector_mul(Side::Left, g.poly).scaled(two_c);
    return GaussianSection(std::move(next), g.weight_c);
}

} // namespace monoclif
