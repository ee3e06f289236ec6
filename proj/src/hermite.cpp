#include "monoclif/hermite.hpp"

#include <stdexcept>

#include "monoclif/fischer.hpp"

namespace monoclif {

ScalarPoly scalar_hermite(int k) {
    if (k < 0) throw std::invalid_argument("scalar_hermite: negative order");
    ScalarPoly h({Rational(1)});
    const ScalarPoly x = ScalarPoly::monomial(1);
    for (int i = 0; i < k; ++i) h = x * h - h.derivative();
    return h;
}

CliffPoly multi_hermite(const std::vector<int>& ks) {
    const int m = static_cast<int>(ks.size());
    CliffPoly out = CliffPoly::scalar_constant(m, VarRole::X, CRational(1));
    for (int j = 1; j <= m; ++j) {
        const ScalarPoly h = scalar_hermite(ks[j - 1]);
        CliffPoly factor(m, VarRole::X);
        for (int i = 0; i <= h.degree(); ++i) {
            const Rational c = h.coefficient(i);
            if (c.is_zero()) continue;
            Monomial mono = Monomial::unit(m);
            mono.exps[j - 1] = i;
            factor.add_term(mono, MultiVector::scalar(m, CRational(c)));
        }
        out = out * factor;
    }
    return out;
}

HermiteCoeffs clifford_hermite(int s, int k, int m) {
    if (s < 0 || k < 0) throw std::invalid_argument("clifford_hermite: negative parameters");
    std::vector<Rational> a{Rational(1)};
    for (int step = 0; step < s; ++step) {
        std::vector<Rational> next(a.size() + 1, Rational(0));
        for (std::size_t j = 0; j < next.size(); ++j) {
            // One application of -d/dx on sum_j a_j x^j P_k e^{-|x|^2/2}:
            // the beta relation lowers a power, the -2c x term raises one.
            if (j >= 1) next[j] += a[j - 1];
            if (j + 1 < a.size() && !a[j + 1].is_zero())
                next[j] -= a[j + 1] * beta(static_cast<int>(j) + 1, k, m);
        }
        a = std::move(next);
    }
    return HermiteCoeffs{s, k, m, std::move(a)};
}

CliffPoly hermite_expand(const HermiteCoeffs& h, const CliffPoly& P) {
    if (P.dimension() != h.m) throw std::invalid_argument("hermite_expand: dimension mismatch");
    CliffPoly out(P.dimension(), P.role());
    CliffPoly power = P;
    for (std::size_t j = 0; j < h.coeffs.size(); ++j) {
        if (!h.coeffs[j].is_zero()) out += power.scaled(h.coeffs[j]);
        if (j + 1 < h.coeffs.size()) power = vector_mul(Side::Left, power);
    }
    return out;
}

GaussianSection basis_section(int s, int k, const CliffPoly& P_k) {
    const auto deg = euler_degree(P_k);
    if (!deg || *deg != k)
        throw std::invalid_argument("basis_section: P_k is not homogeneous of degree k");
    if (!is_monogenic(P_k)) throw std::invalid_argument("basis_section: P_k is not monogenic");
    const HermiteCoeffs h = clifford_hermite(s, k, P_k.dimension());
    return GaussianSection(hermite_expand(h, P_k), Rational(1, 4));
}

} // namespace monoclif
