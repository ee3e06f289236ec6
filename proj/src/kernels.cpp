#include "monoclif/kernels.hpp"

#include <stdexcept>

#include "monoclif/bargmann.hpp"

namespace monoclif {

namespace {

MultiVector vector_from_coords(const std::vector<Rational>& v, int m) {
    MultiVector out(m);
    for (int j = 1; j <= m; ++j) out += MultiVector::generator(m, j).scaled(v[j - 1]);
    return out;
}

BiPoly norm_sq_bipoly(int m, Slot slot, VarRole first, VarRole second) {
    BiPoly out(m, first, second);
    for (int j = 0; j < m; ++j) {
        BiPoly::Key key{Monomial::unit(m), Monomial::unit(m)};
        (slot == Slot::First ? key.first : key.second).exps[j] = 2;
        out.add_term(key, MultiVector::scalar(m, CRational(1)));
    }
    return out;
}

BiPoly dot_bipoly(int m, VarRole first, VarRole second) {
    BiPoly out(m, first, second);
    for (int j = 0; j < m; ++j) {
        Monomial a = Monomial::unit(m), b = Monomial::unit(m);
        a.exps[j] = 1;
        b.exps[j] = 1;
        out.add_term({a, b}, MultiVector::scalar(m, CRational(1)));
    }
    return out;
}

BiPoly wedge_bipoly(int m, VarRole first, VarRole second) {
    BiPoly out(m, first, second);
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            const BladeMask mask = (BladeMask{1} << (i - 1)) | (BladeMask{1} << (j - 1));
            Monomial a = Monomial::unit(m), b = Monomial::unit(m);
            a.exps[i - 1] = 1;
            b.exps[j - 1] = 1;
            out.add_term({a, b}, MultiVector::blade(m, mask, CRational(1)));
            Monomial c = Monomial::unit(m), d = Monomial::unit(m);
            c.exps[j - 1] = 1;
            d.exps[i - 1] = 1;
            out.add_term({c, d}, MultiVector::blade(m, mask, CRational(-1)));
        }
    }
    return out;
}

BiPoly bipoly_power(const BiPoly& base, int e, int m, VarRole first, VarRole second) {
    BiPoly acc = BiPoly::scalar_constant(m, first, second, CRational(1));
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

/// Removes a trailing right factor u^s: u^{2t} is the central scalar
/// (-|u|^2)^t, and one leftover vector factor is undone by multiplying by u
/// on the right once more (u^2 = -|u|^2).
BiPoly strip_right_vector_power(const BiPoly& q, Slot slot, int s) {
    if (s == 0) return q;
    BiPoly work = q;
    int halves = s / 2;
    int sign = halves % 2 ? -1 : 1;
    if (s % 2 != 0) {
        work = vector_mul(slot, Side::Right, work);
        halves = (s + 1) / 2;
        sign = halves % 2 ? -1 : 1;
    }
    for (int i = 0; i < halves; ++i) work = divide_by_norm_sq(work, slot);
    return sign < 0 ? -work : work;
}

} // namespace

CliffPoly plane_wave(const std::vector<Rational>& t, const std::vector<Rational>& s, int k) {
    if (t.size() != s.size()) throw std::invalid_argument("plane_wave: frame arity mismatch");
    const int m = static_cast<int>(t.size());
    if (k < 0) throw std::invalid_argument("plane_wave: negative degree");
    Rational tt = 0, ss = 0, ts = 0;
    for (int j = 0; j < m; ++j) {
        tt += t[j] * t[j];
        ss += s[j] * s[j];
        ts += t[j] * s[j];
    }
    if (tt != Rational(1) || ss != Rational(1) || !ts.is_zero())
        throw std::invalid_argument("plane_wave: (t,s) is not an orthonormal pair");
    const MultiVector tv = vector_from_coords(t, m);
    const MultiVector sv = vector_from_coords(s, m);
    const MultiVector ts_prod = tv * sv; // a bivector since <t,s> = 0
    // base = <x,t> - t s <x,s>, a linear polynomial with values in the
    // commutative subalgebra spanned by 1 and ts.
    CliffPoly base(m, VarRole::X);
    for (int j = 1; j <= m; ++j) {
        MultiVector coeff = MultiVector::scalar(m, CRational(t[j - 1]));
        coeff -= ts_prod.scaled(s[j - 1]);
        Monomial mono = Monomial::unit(m);
        mono.exps[j - 1] = 1;
        base.add_term(mono, coeff);
    }
    CliffPoly acc = CliffPoly::scalar_constant(m, VarRole::X, CRational(1));
    for (int i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

BiPoly dot_power_kernel(int k, int m, VarRole first, VarRole second) {
    const BiPoly dot = dot_bipoly(m, first, second);
    return bipoly_power(dot, k, m, first, second).divided(factorial(k));
}

std::vector<BiPoly> zonal_fischer(int k, int m, VarRole first, VarRole second) {
    const BiPoly w = dot_power_kernel(k, m, first, second);
    const std::vector<BiPoly> parts = fischer_decompose_slot(w, Slot::First);
    std::vector<BiPoly> out;
    out.reserve(parts.size());
    for (int s = 0; s <= k; ++s) {
        BiPoly z = strip_right_vector_power(parts[s], Slot::Second, s);
        if (!dirac_left(z, Slot::First).is_zero() || !dirac_right(z, Slot::Second).is_zero())
            throw std::logic_error("zonal_fischer: Z_{k,s} fails the two-sided system");
        if (z.slot_homogeneous_degree(Slot::First) != k - s ||
            z.slot_homogeneous_degree(Slot::Second) != k - s)
            throw std::logic_error("zonal_fischer: Z_{k,s} is not bihomogeneous of degree k-s");
        out.push_back(std::move(z));
    }
    return out;
}

BiPoly zonal_recursion(int k, int s, const BiPoly& base, int m) {
    if (k < s) throw std::invalid_argument("zonal_recursion: requires k >= s");
    Rational prod = 1;
    for (int j = 1; j <= s; ++j) prod *= beta(j, k - s, m);
    return base.divided(prod);
}

ScalarPoly gegenbauer_poly(int k, const Rational& alpha) {
    if (alpha.sign() <= 0) throw std::invalid_argument("gegenbauer_poly: alpha must be positive");
    if (k < 0) return {};
    ScalarPoly prev2({Rational(1)});
    if (k == 0) return prev2;
    const ScalarPoly t = ScalarPoly::monomial(1);
    ScalarPoly prev1 = t.scaled(alpha * Rational(2));
    if (k == 1) return prev1;
    for (int i = 2; i <= k; ++i) {
        const Rational a = (Rational(i) + alpha - Rational(1)) * Rational(2);
        const Rational b = Rational(i) + alpha * Rational(2) - Rational(2);
        ScalarPoly cur = (t * prev1).scaled(a) - prev2.scaled(b);
        cur = cur.scaled(Rational(1, i));
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

BiPoly zonal_gegenbauer(int k, int m, VarRole first, VarRole second) {
    if (m < 3)
        throw std::invalid_argument("zonal_gegenbauer: the closed form requires m >= 3");
    if (k < 0) throw std::invalid_argument("zonal_gegenbauer: negative degree");
    const Rational half_m(m, 2);
    // Gamma(m/2-1)/Gamma(k+m/2) telescopes to 1/prod_{i=0..k}(m/2-1+i).
    Rational gamma_ratio = 1;
    for (int i = 0; i <= k; ++i) gamma_ratio *= half_m - Rational(1) + Rational(i);
    const Rational pref = (pow(Rational(2), k + 1) * gamma_ratio).inverse();

    const BiPoly dot = dot_bipoly(m, first, second);
    const BiPoly radial =
        norm_sq_bipoly(m, Slot::First, first, second) * norm_sq_bipoly(m, Slot::Second, first, second);

    auto expand = [&](const ScalarPoly& c, int top) {
        // (|x||u|)^top C(t) with t = <x,u>/(|x||u|): parity makes every
        // leftover |x||u| power even.
        BiPoly acc(m, first, second);
        for (int j = 0; j <= c.degree(); ++j) {
            const Rational cj = c.coefficient(j);
            if (cj.is_zero()) continue;
            BiPoly term = bipoly_power(dot, j, m, first, second) *
                          bipoly_power(radial, (top - j) / 2, m, first, second);
            acc += term.scaled(cj);
        }
        return acc;
    };

    BiPoly body = expand(gegenbauer_poly(k, half_m - Rational(1)), k).scaled(Rational(k + m - 2));
    if (k >= 1) {
        const BiPoly angular = wedge_bipoly(m, first, second) *
                               expand(gegenbauer_poly(k - 1, half_m), k - 1);
        body += angular.scaled(Rational(m - 2));
    }
    return body.scaled(pref);
}

std::string zonal_route_string(ZonalRoute r) {
    switch (r) {
        case ZonalRoute::Fischer: return "fischer";
        case ZonalRoute::Recursion: return "recursion";
        case ZonalRoute::Gegenbauer: return "gegenbauer";
    }
    return "?";
}

ZonalRoute zonal_route_from_string(const std::string& s) {
    if (s == "fischer") return ZonalRoute::Fischer;
    if (s == "recursion") return ZonalRoute::Recursion;
    if (s == "gegenbauer") return ZonalRoute::Gegenbauer;
    throw ParseError("unknown zonal route '" + s + "'");
}

bool ZonalTable::has(int k, int s) const { return entries.count({k, s}) != 0; }

const BiPoly& ZonalTable::at(int k, int s) const {
    const auto it = entries.find({k, s});
    if (it == entries.end())
        throw std::invalid_argument("ZonalTable: missing entry (k=" + std::to_string(k) +
                                    ", s=" + std::to_string(s) + ")");
    return it->second;
}

ZonalTable build_zonal_table(int m, int K, ZonalRoute route, VarRole first, VarRole second) {
    if (K < 0) throw std::invalid_argument("build_zonal_table: negative K");
    ZonalTable table;
    table.m = m;
    table.K = K;
    table.route = route;
    table.role_first = first;
    table.role_second = second;
    switch (route) {
        case ZonalRoute::Fischer:
            for (int k = 0; k <= K; ++k) {
                std::vector<BiPoly> zs = zonal_fischer(k, m, first, second);
                for (int s = 0; s <= k; ++s) table.entries.emplace(std::make_pair(k, s), zs[s]);
            }
            break;
        case ZonalRoute::Recursion:
            // The s = 0 family comes straight from the decomposition heads
            // (no u power to strip); everything else is the beta product.
            for (int k = 0; k <= K; ++k) {
                const BiPoly w = dot_power_kernel(k, m, first, second);
                table.entries.emplace(std::make_pair(k, 0),
                                      fischer_decompose_slot(w, Slot::First).front());
            }
            for (int k = 1; k <= K; ++k)
                for (int s = 1; s <= k; ++s)
                    table.entries.emplace(std::make_pair(k, s),
                                          zonal_recursion(k, s, table.at(k - s, 0), m));
            break;
        case ZonalRoute::Gegenbauer:
            for (int k = 0; k <= K; ++k)
                table.entries.emplace(std::make_pair(k, 0), zonal_gegenbauer(k, m, first, second));
            break;
    }
    return table;
}

KernelTruncation fourier_borel_truncation(int s, int K, const ZonalTable& table) {
    if (K < s) throw std::invalid_argument("fourier_borel_truncation: requires K >= s");
    if (K > table.K) throw std::invalid_argument("fourier_borel_truncation: table too small");
    BiPoly acc(table.m, table.role_first, table.role_second);
    for (int k = s; k <= K; ++k) acc += table.at(k, s);
    return KernelTruncation{s, K, std::move(acc)};
}

std::pair<CliffPoly, CliffPoly> reproducing_check(const CliffPoly& P_k, const ZonalTable& table,
                                                  ReproducingKernel which) {
    const auto deg = euler_degree(P_k);
    if (!deg || !is_monogenic(P_k))
        throw std::invalid_argument("reproducing_check: P_k must be homogeneous monogenic");
    if (*deg > table.K) throw std::invalid_argument("reproducing_check: table K < deg(P_k)");
    BiPoly kernel(table.m, table.role_first, table.role_second);
    if (which == ReproducingKernel::ZonalDegree)
        kernel = table.at(*deg, 0);
    else
        kernel = fourier_borel_truncation(0, table.K, table).value;
    // kernel(u,x) swaps the arguments: same exponents, exchanged roles. The
    // pairing then differentiates in the second (x) slot and leaves u formal.
    const BiPoly arg_swapped =
        kernel.with_roles(table.role_second, table.role_first).hermitian_conjugate();
    CliffPoly lhs = fischer_pair_slot(arg_swapped, Slot::Second, P_k);
    CliffPoly rhs = P_k.with_role(arg_swapped.role(Slot::First));
    return {std::move(lhs), std::move(rhs)};
}

BiPoly bs_kernel(int s, int K, const ZonalTable& table) {
    if (s < 1) throw std::invalid_argument("bs_kernel: s must be >= 1");
    if (K < s) throw std::invalid_argument("bs_kernel: requires K >= s");
    BiPoly acc(table.m, table.role_first, table.role_second);
    std::vector<Rational> lfac; // 1/(2^l l!)
    for (int l = 0; 2 * l <= s - 1; ++l)
        lfac.push_back((pow(Rational(2), l) * factorial(l)).inverse());
    for (int j = 0; j <= s - 1; ++j) {
        for (int l = 0; 2 * l <= j; ++l) {
            const int i = j - 2 * l;
            BiPoly term = fourier_borel_truncation(i, K, table).value.scaled(lfac[l]);
            for (int r = 0; r < i; ++r) term = vector_mul(Slot::Second, Side::Right, term);
            for (int r = 0; r < j; ++r) term = vector_mul(Slot::First, Side::Left, term);
            acc += term;
        }
    }
    return acc;
}

BiPoly bs_kernel_from_series(int s, int K, int m) {
    if (s < 1) throw std::invalid_argument("bs_kernel_from_series: s must be >= 1");
    const VarRole first = VarRole::Z, second = VarRole::X;
    // exp(-z.z/2) = sum_l z^{2l}/(2^l l!) with z^2 = -|z|^2 central.
    BiPoly gauss(m, first, second);
    const BiPoly znorm = norm_sq_bipoly(m, Slot::First, first, second);
    Rational coeff = 1;
    for (int l = 0; 2 * l <= K; ++l) {
        if (l > 0) coeff *= Rational(-1, 2 * l);
        gauss += bipoly_power(znorm, l, m, first, second).scaled(coeff);
    }
    // exp(<x,z>) truncated at k <= K.
    BiPoly expo(m, first, second);
    for (int k = 0; k <= K; ++k) expo += dot_power_kernel(k, m, first, second);
    return truncated_projection_slot(gauss * expo, Slot::First, s);
}

std::pair<CliffPoly, CliffPoly> weierstrass_kernel_check(const CliffPoly& g, int s, int K,
                                                         const ZonalTable& table) {
    if (s < 1) throw std::invalid_argument("weierstrass_kernel_check: s must be >= 1");
    CliffPoly probe = g;
    for (int i = 0; i < s && !probe.is_zero(); ++i) probe = dirac_left(probe);
    if (!probe.is_zero())
        throw std::invalid_argument("weierstrass_kernel_check: g is not s-monogenic");
    if (g.total_degree() > K - (s - 1))
        throw std::invalid_argument("weierstrass_kernel_check: deg(g) exceeds K - (s-1)");
    const CliffPoly direct = segal_bargmann(GaussianSection(g, Rational(1, 4)));
    const BiPoly bs = bs_kernel(s, K, table);
    const BiPoly paired = bs.mul_poly(Slot::Second, Side::Right, g);
    CliffPoly via_kernel = moment_slot(paired, Slot::Second);
    return {direct, std::move(via_kernel)};
}

} // namespace monoclif
