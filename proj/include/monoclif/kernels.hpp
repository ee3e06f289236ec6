#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "monoclif/fischer.hpp"
#include "monoclif/scalar_poly.hpp"

namespace monoclif {

/// Monogenic plane wave (<x,t> - t s <x,s>)^k for an exactly orthonormal
/// rational pair (t, s). Throws std::invalid_argument unless <t,t> = <s,s> = 1
/// and <t,s> = 0.
CliffPoly plane_wave(const std::vector<Rational>& t, const std::vector<Rational>& s, int k);

/// <x,u>^k / k! as a two-tuple polynomial.
BiPoly dot_power_kernel(int k, int m, VarRole first, VarRole second);

/// Zonal spherical monogenics Z_{k,s} for s = 0..k, obtained by Fischer
/// decomposition of <x,u>^k/k! in the first slot with the trailing u^s
/// factored off from the right. Verifies the two-sided system
/// d_x Z = Z d_u = 0 and bihomogeneity on every entry.
std::vector<BiPoly> zonal_fischer(int k, int m, VarRole first = VarRole::X,
                                  VarRole second = VarRole::U);

/// Z_{k,s} = Z_{k-s,0} / (beta_{s,k-s} ... beta_{1,k-s}). Requires k >= s.
BiPoly zonal_recursion(int k, int s, const BiPoly& base, int m);

/// Classical Gegenbauer polynomial C_k^alpha by the three-term recurrence.
ScalarPoly gegenbauer_poly(int k, const Rational& alpha);

/// Z_k = Z_{k,0} from the Gegenbauer closed form; the Gamma ratio is a
/// telescoping rational product of half-integers, the norms appear only in
/// even powers. Requires m >= 3.
BiPoly zonal_gegenbauer(int k, int m, VarRole first = VarRole::X, VarRole second = VarRole::U);

enum class ZonalRoute { Fischer, Recursion, Gegenbauer };

std::string zonal_route_string(ZonalRoute r);
ZonalRoute zonal_route_from_string(const std::string& s);

/// Table of Z_{k,s} entries for k <= K. The gegenbauer route only fills
/// s = 0; the recursion route derives s >= 1 entries from the s = 0 family.
struct ZonalTable {
    int m = 0;
    int K = 0;
    ZonalRoute route = ZonalRoute::Fischer;
    VarRole role_first = VarRole::X;
    VarRole role_second = VarRole::U;
    std::map<std::pair<int, int>, BiPoly> entries;

    bool has(int k, int s) const;
    const BiPoly& at(int k, int s) const;
};

ZonalTable build_zonal_table(int m, int K, ZonalRoute route, VarRole first = VarRole::X,
                             VarRole second = VarRole::U);

/// Degree truncation of E_s(x,u) = sum_{k>=s} Z_{k,s}: keeps k = s..K.
struct KernelTruncation {
    int s = 0;
    int K = 0;
    BiPoly value;
};

KernelTruncation fourier_borel_truncation(int s, int K, const ZonalTable& table);

enum class ReproducingKernel { ZonalDegree, TruncatedFourierBorel };

/// Both sides of P_k(u) = [Z_k(u,x)^dagger, P_k(x)] (or with the truncated
/// Fourier-Borel kernel E(u,x)): the Fischer pairing acts in x, u stays
/// formal. Only the degree-k summand can pair, so the truncation is exact.
std::pair<CliffPoly, CliffPoly> reproducing_check(
    const CliffPoly& P_k, const ZonalTable& table,
    ReproducingKernel which = ReproducingKernel::ZonalDegree);

/// B_s(z,x) = sum_{j<s} z^j sum_{l<=j/2} E_{j-2l}(z,x) x^{j-2l} / (2^l l!),
/// every E truncated at zonal degree K. The table must live in (z,x) roles.
BiPoly bs_kernel(int s, int K, const ZonalTable& table);

/// Independent route: the s-monogenic projection (in z) of the truncated
/// series of exp(-z.z/2 + x.z), with the <x,z> series cut at k <= K.
BiPoly bs_kernel_from_series(int s, int K, int m);

/// (Segal-Bargmann of g e^{-|x|^2/4} ; moment pairing of B_s(z,x) against g).
/// g must be s-monogenic with deg(g) <= K - (s-1); the table must be a (z,x)
/// table with table.K >= K.
std::pair<CliffPoly, CliffPoly> weierstrass_kernel_check(const CliffPoly& g, int s, int K,
                                                         const ZonalTable& table);

} // namespace monoclif
