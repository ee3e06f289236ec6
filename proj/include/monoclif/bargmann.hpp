#pragma once

#include <utility>
#include <vector>

#include "monoclif/calculus.hpp"
#include "monoclif/scalar_poly.hpp"

namespace monoclif {

/// Normalized Gaussian moment (2pi)^{-m/2} int x^alpha e^{-|x|^2/2} dx:
/// the product of (alpha_j - 1)!! when every alpha_j is even, zero otherwise.
/// Both moment functionals are normalized so mu(1) = 1; no irrational
/// constant is ever represented.
Rational gaussian_moment(const Monomial& alpha);
Rational gaussian_moment_1d(int n);

/// Applies the real moment functional to every monomial of p.
MultiVector moment_functional(const CliffPoly& p);

/// Moment functional over one slot of a kernel; the other slot survives.
CliffPoly moment_slot(const BiPoly& p, Slot slot);

/// L^2 Gaussian inner product of two weight-1/4 sections:
/// (2pi)^{-m/2} int f^dagger g e^{-|x|^2/2} dx (the two section weights
/// combine into the single e^{-|x|^2/2}). Throws unless both weights are 1/4.
MultiVector l2_inner_product(const GaussianSection& f, const GaussianSection& g);

/// Segal-Bargmann transform of P(x) e^{-|x|^2/4}, computed as the heat
/// semigroup at time 1/2: B[f](z) = sum_n Laplacian^n P (z) / (2^n n!),
/// a finite sum on polynomials. The result lives in the z role.
CliffPoly segal_bargmann(const GaussianSection& f);

/// Independent route for the same transform: the Gaussian-convolution
/// expansion sum_alpha (d^alpha P)(z) mu(alpha) / alpha!. Kept deliberately
/// separate from the heat route so the two can cross-check each other.
CliffPoly segal_bargmann_moments(const GaussianSection& f);

/// One-variable transform of a polynomial part (same heat-semigroup sum).
ScalarPoly transform_1d(const ScalarPoly& p);

/// One-variable Gaussian pairing (1/sqrt(2pi)) int f g e^{-x^2/2} dx.
Rational inner_product_1d(const ScalarPoly& f, const ScalarPoly& g);

/// Bargmann-Fock inner product pi^{-m} int e^{-|z|^2} f^dagger g:
/// the monomial rule <z^a, z^b> = delta_ab a! applied to coefficient pairs.
MultiVector bargmann_inner_product(const CliffPoly& f, const CliffPoly& g);

/// (L^2 pairing of f,g ; Bargmann pairing of their transforms).
std::pair<MultiVector, MultiVector> isometry_check(const GaussianSection& f,
                                                   const GaussianSection& g);

/// Both sides of B[psi_{s,k} P_k] = z^s B[P_k e^{-|x|^2/4}], computed
/// independently.
std::pair<CliffPoly, CliffPoly> transform_factorization_check(int s, int k, const CliffPoly& P_k);

/// Monogenic part of the transform of g e^{-|x|^2/4}; returns g itself
/// (re-expressed in z) when g is monogenic.
CliffPoly monogenic_part_of_transform(const GaussianSection& f);

} // namespace monoclif
