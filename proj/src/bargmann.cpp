#include "monoclif/bargmann.hpp"

#include <stdexcept>

#include "monoclif/fischer.hpp"
#include "monoclif/hermite.hpp"

namespace monoclif {

namespace {

const Rational kSectionWeight(1, 4);

void check_section_weight(const GaussianSection& f) {
    if (f.weight_c != kSectionWeight)
        throw std::invalid_argument("expected a section with Gaussian weight 1/4, got c = " +
                                    f.weight_c.str());
}

// Enumerates even multi-indices alpha with |alpha| <= max_total, invoking
// fn(alpha) for each.
template <typename Fn>
void for_each_even_index(int m, int max_total, Fn&& fn) {
    Monomial alpha = Monomial::unit(m);
    // Depth-first over positions; steps of 2 keep every entry even.
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == m) {
            fn(alpha);
            return;
        }
        for (int e = 0; used + e <= max_total; e += 2) {
            alpha.exps[pos] = e;
            self(self, pos + 1, used + e);
        }
        alpha.exps[pos] = 0;
    };
    rec(rec, 0, 0);
}

} // namespace

Rational gaussian_moment_1d(int n) {
    if (n < 0) throw std::invalid_argument("gaussian_moment_1d: negative exponent");
    if (n % 2 != 0) return 0;
    return double_factorial(n - 1);
}

Rational gaussian_moment(const Monomial& alpha) {
    Rational acc = 1;
    for (int e : alpha.exps) {
        if (e % 2 != 0) return 0;
        acc *= double_factorial(e - 1);
    }
    return acc;
}

MultiVector moment_functional(const CliffPoly& p) {
    MultiVector acc(p.dimension());
    for (const auto& [mono, c] : p.terms()) {
        const Rational mu = gaussian_moment(mono);
        if (mu.is_zero()) continue;
        acc += c.scaled(mu);
    }
    return acc;
}

CliffPoly moment_slot(const BiPoly& p, Slot slot) {
    const Slot keep = slot == Slot::First ? Slot::Second : Slot::First;
    CliffPoly out(p.dimension(), p.role(keep));
    for (const auto& [key, c] : p.terms()) {
        const Monomial& active = slot == Slot::First ? key.first : key.second;
        const Rational mu = gaussian_moment(active);
        if (mu.is_zero()) continue;
        out.add_term(slot == Slot::First ? key.second : key.first, c.scaled(mu));
    }
    return out;
}

MultiVector l2_inner_product(const GaussianSection& f, const GaussianSection& g) {
    check_section_weight(f);
    check_section_weight(g);
    return moment_functional(f.poly.hermitian_conjugate() * g.poly);
}

CliffPoly segal_bargmann(const GaussianSection& f) {
    check_section_weight(f);
    CliffPoly acc = f.poly;
    CliffPoly cur = f.poly;
    Rational factor = 1;
    for (int n = 1; !cur.is_zero(); ++n) {
        cur = laplacian(cur);
        if (cur.is_zero()) break;
        factor /= Rational(2 * n);
        acc += cur.scaled(factor);
    }
    return acc.with_role(VarRole::Z);
}

CliffPoly segal_bargmann_moments(const GaussianSection& f) {
    check_section_weight(f);
    const int m = f.poly.dimension();
    CliffPoly acc(m, f.poly.role());
    for_each_even_index(m, f.poly.total_degree(), [&](const Monomial& alpha) {
        CliffPoly d = f.poly;
        Rational weight = 1; // mu(alpha)/alpha! = prod 1/(2^{a/2} (a/2)!)
        for (int j = 1; j <= m && !d.is_zero(); ++j) {
            for (int e = 0; e < alpha.exps[j - 1]; ++e) d = d.derivative(j);
            weight *= gaussian_moment_1d(alpha.exps[j - 1]) / factorial(alpha.exps[j - 1]);
        }
        if (d.is_zero()) return;
        acc += d.scaled(weight);
    });
    return acc.with_role(VarRole::Z);
}

ScalarPoly transform_1d(const ScalarPoly& p) {
    ScalarPoly acc = p;
    ScalarPoly cur = p;
    Rational factor = 1;
    for (int n = 1; !cur.is_zero(); ++n) {
        cur = cur.derivative().derivative();
        if (cur.is_zero()) break;
        factor /= Rational(2 * n);
        acc += cur.scaled(factor);
    }
    return acc;
}

Rational inner_product_1d(const ScalarPoly& f, const ScalarPoly& g) {
    const ScalarPoly prod = f * g;
    Rational acc = 0;
    for (int i = 0; i <= prod.degree(); ++i)
        acc += prod.coefficient(i) * gaussian_moment_1d(i);
    return acc;
}

MultiVector bargmann_inner_product(const CliffPoly& f, const CliffPoly& g) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("bargmann_inner_product: dimension mismatch");
    MultiVector acc(f.dimension());
    for (const auto& [mono, fc] : f.terms()) {
        const MultiVector gc = g.coefficient(mono);
        if (gc.is_zero()) continue;
        Rational fact = 1;
        for (int e : mono.exps) fact *= factorial(e);
        acc += (fc.hermitian_conjugate() * gc).scaled(fact);
    }
    return acc;
}

std::pair<MultiVector, MultiVector> isometry_check(const GaussianSection& f,
                                                   const GaussianSection& g) {
    return {l2_inner_product(f, g), bargmann_inner_product(segal_bargmann(f), segal_bargmann(g))};
}

std::pair<CliffPoly, CliffPoly> transform_factorization_check(int s, int k, const CliffPoly& P_k) {
    const CliffPoly lhs = segal_bargmann(basis_section(s, k, P_k));
    CliffPoly rhs = segal_bargmann(GaussianSection(P_k, Rational(1, 4)));
    for (int i = 0; i < s; ++i) rhs = vector_mul(Side::Left, rhs);
    return {lhs, rhs};
}

CliffPoly monogenic_part_of_transform(const GaussianSection& f) {
    return monogenic_projection(segal_bargmann(f));
}

} // namespace monoclif
