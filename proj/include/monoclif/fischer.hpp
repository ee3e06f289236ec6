#pragma once

#include <utility>
#include <vector>

#include "monoclif/calculus.hpp"

namespace monoclif {

/// Eigenvalue constants of d/dx (x^s P_k) = beta_{s,k} x^{s-1} P_k for
/// monogenic P_k of degree k: beta_{2t,k} = -2t, beta_{2t+1,k} = -(2t+2k+m).
/// Requires s >= 1 (the s = 0 case is just the monogenicity of P_k).
Rational beta(int s, int k, int m);

/// Result of the Fischer decomposition R_k = sum_s x^s M_{k-s}.
/// parts[s] is M_{k-s}, so parts.front() is the monogenic part M_k.
struct FischerParts {
    int k = 0;
    std::vector<CliffPoly> parts;
};

/// Decomposes a homogeneous polynomial into monogenic parts by the
/// beta-triangular recursion: the decomposition of dR at position s-1 equals
/// beta_{s,k-s} M_{k-s}, and those betas are never zero.
/// Throws std::invalid_argument on inhomogeneous input, std::logic_error if
/// the reconstructed head fails the monogenicity assertion.
FischerParts fischer_decompose(const CliffPoly& R);

/// Same recursion acting in one slot of a two-tuple polynomial, the other
/// slot riding along inside the coefficients. parts[s] is the factor of v^s.
std::vector<BiPoly> fischer_decompose_slot(const BiPoly& R, Slot slot);

/// Fischer inner product [R,S] = R(d)^dagger S |_{x=0}: each monomial of R
/// becomes a derivative, its coefficient is Hermitian-conjugated and acts by
/// left multiplication. Sesquilinear, conjugate-linear in R.
MultiVector fischer_inner_product(const CliffPoly& R, const CliffPoly& S);

/// Fischer pairing of a two-variable kernel against S in the given slot of R;
/// the other slot stays formal and carries the result. Coefficients of R are
/// daggered by the pairing, exactly as in fischer_inner_product.
CliffPoly fischer_pair_slot(const BiPoly& R, Slot slot, const CliffPoly& S);

/// Monogenic part of f: per-degree Fischer decomposition, keep each M_k.
CliffPoly monogenic_projection(const CliffPoly& f);

/// Projection onto the s-monogenic submodule: keep Fischer summands x^j f_j
/// with j <= s-1. Requires s >= 1.
CliffPoly truncated_projection(const CliffPoly& f, int s);
BiPoly truncated_projection_slot(const BiPoly& f, Slot slot, int s);

/// Both sides of the harmonic Fischer-Gaussian identity
/// [R,S] = (2pi)^{-m/2} int R^dagger S e^{-|x|^2/2}: (Fischer, moment) pair.
/// Throws std::invalid_argument unless both inputs are harmonic.
std::pair<MultiVector, MultiVector> fischer_gaussian_identity_check(const CliffPoly& R,
                                                                    const CliffPoly& S);

} // namespace monoclif
