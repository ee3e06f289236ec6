#include "monoclif/fischer.hpp"

#include <stdexcept>

#include "monoclif/bargmann.hpp"

namespace monoclif {

Rational beta(int s, int k, int m) {
    if (s < 1) throw std::invalid_argument("beta: s must be >= 1");
    if (k < 0) throw std::invalid_argument("beta: k must be >= 0");
    if (s % 2 == 0) return Rational(-s);
    return Rational(-(s - 1 + 2 * k + m));
}

namespace {

// Recursion on the slot degree k. Position s-1 of the decomposition of the
// Dirac derivative is beta_{s,k-s} M_{k-s}; the head is what remains.
std::vector<BiPoly> decompose_rec(const BiPoly& R, Slot slot, int k, int m) {
    if (k == 0) return {R};
    const BiPoly dR = dirac_left(R, slot);
    std::vector<BiPoly> sub = decompose_rec(dR, slot, k - 1, m);
    std::vector<BiPoly> parts;
    parts.reserve(k + 1);
    BiPoly head = R;
    parts.push_back(head); // placeholder for M_k
    for (int s = 1; s <= k; ++s) {
        BiPoly part = sub[s - 1].divided(beta(s, k - s, m));
        BiPoly shifted = part;
        for (int i = 0; i < s; ++i) shifted = vector_mul(slot, Side::Left, shifted);
        head -= shifted;
        parts.push_back(std::move(part));
    }
    if (!dirac_left(head, slot).is_zero())
        throw std::logic_error("fischer decomposition: head is not monogenic");
    parts[0] = std::move(head);
    return parts;
}

VarRole spare_role(VarRole used) { return used == VarRole::X ? VarRole::U : VarRole::X; }

} // namespace

std::vector<BiPoly> fischer_decompose_slot(const BiPoly& R, Slot slot) {
    const auto deg = R.slot_homogeneous_degree(slot);
    if (!deg)
        throw std::invalid_argument("fischer_decompose: polynomial is inhomogeneous in the slot");
    return decompose_rec(R, slot, *deg, R.dimension());
}

FischerParts fischer_decompose(const CliffPoly& R) {
    const auto deg = euler_degree(R);
    if (!deg) throw std::invalid_argument("fischer_decompose: polynomial is inhomogeneous");
    const BiPoly embedded = BiPoly::embed(R, Slot::First, spare_role(R.role()));
    std::vector<BiPoly> parts = fischer_decompose_slot(embedded, Slot::First);
    FischerParts out;
    out.k = *deg;
    out.parts.reserve(parts.size());
    for (const BiPoly& p : parts) out.parts.push_back(p.collapse(Slot::First));
    return out;
}

MultiVector fischer_inner_product(const CliffPoly& R, const CliffPoly& S) {
    if (R.dimension() != S.dimension())
        throw std::invalid_argument("fischer_inner_product: dimension mismatch");
    const int m = R.dimension();
    MultiVector acc(m);
    for (const auto& [mono, r] : R.terms()) {
        CliffPoly d = S;
        for (int j = 1; j <= m; ++j)
            for (int e = 0; e < mono.exps[j - 1] && !d.is_zero(); ++e) d = d.derivative(j);
        const MultiVector c = d.constant_term();
        if (c.is_zero()) continue;
        acc += r.hermitian_conjugate() * c;
    }
    return acc;
}

CliffPoly fischer_pair_slot(const BiPoly& R, Slot slot, const CliffPoly& S) {
    if (R.dimension() != S.dimension())
        throw std::invalid_argument("fischer_pair_slot: dimension mismatch");
    const int m = R.dimension();
    const Slot other = slot == Slot::First ? Slot::Second : Slot::First;
    CliffPoly out(m, R.role(other));
    for (const auto& [key, r] : R.terms()) {
        const Monomial& active = slot == Slot::First ? key.first : key.second;
        const Monomial& formal = slot == Slot::First ? key.second : key.first;
        CliffPoly d = S;
        for (int j = 1; j <= m; ++j)
            for (int e = 0; e < active.exps[j - 1] && !d.is_zero(); ++e) d = d.derivative(j);
        const MultiVector c = d.constant_term();
        if (c.is_zero()) continue;
        out.add_term(formal, r.hermitian_conjugate() * c);
    }
    return out;
}

CliffPoly monogenic_projection(const CliffPoly& f) {
    CliffPoly out(f.dimension(), f.role());
    for (int k = 0; k <= f.total_degree(); ++k) {
        const CliffPoly comp = f.homogeneous_component(k);
        if (comp.is_zero()) continue;
        out += fischer_decompose(comp).parts.front();
    }
    return out;
}

CliffPoly truncated_projection(const CliffPoly& f, int s) {
    if (s < 1) throw std::invalid_argument("truncated_projection: s must be >= 1");
    CliffPoly out(f.dimension(), f.role());
    for (int k = 0; k <= f.total_degree(); ++k) {
        const CliffPoly comp = f.homogeneous_component(k);
        if (comp.is_zero()) continue;
        const FischerParts parts = fischer_decompose(comp);
        for (int j = 0; j < s && j <= parts.k; ++j) {
            CliffPoly shifted = parts.parts[j];
            for (int i = 0; i < j; ++i) shifted = vector_mul(Side::Left, shifted);
            out += shifted;
        }
    }
    return out;
}

BiPoly truncated_projection_slot(const BiPoly& f, Slot slot, int s) {
    if (s < 1) throw std::invalid_argument("truncated_projection: s must be >= 1");
    BiPoly out(f.dimension(), f.role(Slot::First), f.role(Slot::Second));
    for (int k = 0; k <= f.degree(slot); ++k) {
        const BiPoly comp = f.homogeneous_component(slot, k);
        if (comp.is_zero()) continue;
        const std::vector<BiPoly> parts = fischer_decompose_slot(comp, slot);
        for (int j = 0; j < s && j < static_cast<int>(parts.size()); ++j) {
            BiPoly shifted = parts[j];
            for (int i = 0; i < j; ++i) shifted = vector_mul(slot, Side::Left, shifted);
            out += shifted;
        }
    }
    return out;
}

std::pair<MultiVector, MultiVector> fischer_gaussian_identity_check(const CliffPoly& R,
                                                                    const CliffPoly& S) {
    if (!laplacian(R).is_zero() || !laplacian(S).is_zero())
        throw std::invalid_argument("fischer_gaussian_identity_check: inputs must be harmonic");
    const MultiVector lhs = fischer_inner_product(R, S);
    const MultiVector rhs = moment_functional(R.hermitian_conjugate() * S);
    return {lhs, rhs};
}

} // namespace monoclif
