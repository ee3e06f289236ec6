#pragma once

#include <vector>

#include "monoclif/calculus.hpp"
#include "monoclif/scalar_poly.hpp"

namespace monoclif {

/// Probabilists' Hermite polynomial H_k, the one defined by
/// H_k(x) = (-1)^k e^{x^2/2} d^k/dx^k e^{-x^2/2}.
ScalarPoly scalar_hermite(int k);

/// Product basis H_{k_1...k_m}(x) = H_{k_1}(x_1) ... H_{k_m}(x_m) as a
/// polynomial with scalar coefficients; the Gaussian factorizes.
CliffPoly multi_hermite(const std::vector<int>& ks);

/// Clifford-Hermite polynomial H_{s,k} stored as coefficients of powers of
/// the vector variable: H_{s,k}(x) = sum_j a_j x^j. Only powers of parity s
/// appear and a_s = 1; the coefficients do not depend on the specific P_k.
struct HermiteCoeffs {
    int s = 0;
    int k = 0;
    int m = 0;
    std::vector<Rational> coeffs; // a_0 ... a_s
};

/// Built by applying the ladder map a_j -> a_{j-1} - a_{j+1} beta_{j+1,k}
/// s times starting from [1]; this is (-1)^s d^s acting on P_k e^{-|x|^2/2}
/// reduced to the x-power coefficient sequence via the beta relations.
HermiteCoeffs clifford_hermite(int s, int k, int m);

/// Expands sum_j a_j x^j P as a polynomial (x^j acting by left multiplication).
CliffPoly hermite_expand(const HermiteCoeffs& h, const CliffPoly& P);

/// The basis section psi_{s,k} P_k = H_{s,k}(x) P_k(x) e^{-|x|^2/4}.
/// Requires P_k monogenic homogeneous of degree k.
GaussianSection basis_section(int s, int k, const CliffPoly& P_k);

} // namespace monoclif
