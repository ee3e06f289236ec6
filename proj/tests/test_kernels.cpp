#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monoclif/bargmann.hpp"
#include "monoclif/kernels.hpp"
#include "monoclif/verify.hpp"

using namespace monoclif;

namespace {
BiPoly z1_expected(int m) {
    // Z_1 = ((m-1)<x,u> + x^u)/m
    BiPoly out(m, VarRole::X, VarRole::U);
    for (int j = 0; j < m; ++j) {
        Monomial a = Monomial::unit(m), b = Monomial::unit(m);
        a.exps[j] = 1;
        b.exps[j] = 1;
        out.add_term({a, b}, MultiVector::scalar(m, CRational(Rational(m - 1, m))));
    }
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            const BladeMask mask = (BladeMask{1} << (i - 1)) | (BladeMask{1} << (j - 1));
            Monomial a = Monomial::unit(m), b = Monomial::unit(m);
            a.exps[i - 1] = 1;
            b.exps[j - 1] = 1;
            out.add_term({a, b}, MultiVector::blade(m, mask, CRational(Rational(1, m))));
            Monomial c = Monomial::unit(m), d = Monomial::unit(m);
            c.exps[j - 1] = 1;
            d.exps[i - 1] = 1;
            out.add_term({c, d}, MultiVector::blade(m, mask, CRational(Rational(-1, m))));
        }
    return out;
}
} // namespace

TEST_CASE("plane waves") {
    const int m = 2;
    const std::vector<Rational> t{1, 0}, s{0, 1};
    // axes give (x1 - e1e2 x2)^k
    const MultiVector e12 = MultiVector::generator(m, 1) * MultiVector::generator(m, 2);
    const CliffPoly base = CliffPoly::variable(m, VarRole::X, 1) -
                           CliffPoly::variable(m, VarRole::X, 2).mul_left(e12);
    CliffPoly power = CliffPoly::scalar_constant(m, VarRole::X, CRational(1));
    for (int k = 0; k <= 4; ++k) {
        CHECK(plane_wave(t, s, k) == power);
        power = power * base;
    }
    CHECK(plane_wave(t, s, 0) == CliffPoly::scalar_constant(m, VarRole::X, CRational(1)));

    const std::vector<Rational> t3{Rational(3, 5), Rational(4, 5), Rational(0)};
    const std::vector<Rational> s3{Rational(-4, 5), Rational(3, 5), Rational(0)};
    CHECK(dirac_left(plane_wave(t3, s3, 2)).is_zero());
    CHECK(euler_degree(plane_wave(t3, s3, 3)) == 3);

    CHECK_THROWS_AS(plane_wave({Rational(1), Rational(1)}, {Rational(0), Rational(1)}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(plane_wave({Rational(1), Rational(0)}, {Rational(1), Rational(0)}, 1),
                    std::invalid_argument);
}

TEST_CASE("zonal fischer small degrees") {
    for (int m = 2; m <= 4; ++m) {
        const auto z0 = zonal_fischer(0, m);
        CHECK(z0.size() == 1);
        CHECK(z0[0] == BiPoly::scalar_constant(m, VarRole::X, VarRole::U, CRational(1)));

        const auto z1 = zonal_fischer(1, m);
        CHECK(z1[0] == z1_expected(m));
        CHECK(z1[1] == BiPoly::scalar_constant(m, VarRole::X, VarRole::U,
                                               CRational(Rational(-1, m))));
    }
}

TEST_CASE("zonal recursion route") {
    const int m = 3;
    // s = 0: unchanged
    const auto z2 = zonal_fischer(2, m);
    CHECK(zonal_recursion(2, 0, z2[0], m) == z2[0]);
    // k=1, s=1: Z_0/beta_{1,0} = -1/m
    const BiPoly z0 = zonal_fischer(0, m)[0];
    CHECK(zonal_recursion(1, 1, z0, m) ==
          BiPoly::scalar_constant(m, VarRole::X, VarRole::U, CRational(Rational(-1, m))));
    // k=3, s=2 equals the fischer route
    const auto z3 = zonal_fischer(3, m);
    const BiPoly base = zonal_fischer(1, m)[0];
    CHECK(zonal_recursion(3, 2, base, m) == z3[2]);
    CHECK_THROWS_AS(zonal_recursion(1, 2, z0, m), std::invalid_argument);
}

TEST_CASE("gegenbauer polynomials") {
    const Rational alpha(3, 2);
    CHECK(gegenbauer_poly(0, alpha) == ScalarPoly({Rational(1)}));
    CHECK(gegenbauer_poly(1, alpha) == ScalarPoly::monomial(1, alpha * Rational(2)));
    // C_2 = 2a(a+1)t^2 - a
    const ScalarPoly c2 = gegenbauer_poly(2, alpha);
    ScalarPoly expect = ScalarPoly::monomial(2, alpha * (alpha + Rational(1)) * Rational(2));
    expect += ScalarPoly({-alpha});
    CHECK(c2 == expect);
    CHECK_THROWS_AS(gegenbauer_poly(2, Rational(0)), std::invalid_argument);
}

TEST_CASE("gegenbauer closed form for Z_k") {
    CHECK(zonal_gegenbauer(0, 3) == BiPoly::scalar_constant(3, VarRole::X, VarRole::U, CRational(1)));
    // k=1, m=3: (2<x,u> + x^u)/3
    CHECK(zonal_gegenbauer(1, 3) == z1_expected(3));
    // cross-route checks
    CHECK(zonal_gegenbauer(2, 3) == zonal_fischer(2, 3)[0]);
    CHECK(zonal_gegenbauer(2, 4) == zonal_fischer(2, 4)[0]);
    CHECK(zonal_gegenbauer(3, 3) == zonal_fischer(3, 3)[0]);
    CHECK_THROWS_AS(zonal_gegenbauer(2, 2), std::invalid_argument);
}

TEST_CASE("zonal table and reassembly") {
    for (int m = 2; m <= 3; ++m) {
        const ZonalTable table = build_zonal_table(m, 4, ZonalRoute::Fischer);
        for (int k = 0; k <= 4; ++k) {
            BiPoly sum(m, VarRole::X, VarRole::U);
            for (int s = 0; s <= k; ++s) {
                BiPoly t = table.at(k, s);
                for (int i = 0; i < s; ++i) {
                    t = vector_mul(Slot::First, Side::Left, t);
                    t = vector_mul(Slot::Second, Side::Right, t);
                }
                sum += t;
            }
            CHECK(sum == dot_power_kernel(k, m, VarRole::X, VarRole::U));
        }
    }
}

TEST_CASE("fourier-borel truncations") {
    const int m = 3;
    const ZonalTable table = build_zonal_table(m, 3, ZonalRoute::Fischer);
    const KernelTruncation e00 = fourier_borel_truncation(0, 0, table);
    CHECK(e00.value == BiPoly::scalar_constant(m, VarRole::X, VarRole::U, CRational(1)));
    const KernelTruncation e01 = fourier_borel_truncation(0, 1, table);
    CHECK(e01.value == BiPoly::scalar_constant(m, VarRole::X, VarRole::U, CRational(1)) +
                           z1_expected(m));
    CHECK_THROWS_AS(fourier_borel_truncation(2, 1, table), std::invalid_argument);
}

TEST_CASE("reproducing property") {
    Rng rng(67);
    for (int m = 2; m <= 3; ++m) {
        const ZonalTable table = build_zonal_table(m, 4, ZonalRoute::Fischer);
        // P_0 = 1
        const CliffPoly one = CliffPoly::scalar_constant(m, VarRole::X, CRational(1));
        {
            const auto [lhs, rhs] = reproducing_check(one, table);
            CHECK(lhs == rhs);
            CHECK(lhs == one.with_role(VarRole::U));
        }
        // P_1 = x1 - e1e2 x2 reproduces as u1 - e1e2 u2
        const MultiVector e12 = MultiVector::generator(m, 1) * MultiVector::generator(m, 2);
        const CliffPoly P1 = CliffPoly::variable(m, VarRole::X, 1) -
                             CliffPoly::variable(m, VarRole::X, 2).mul_left(e12);
        {
            const auto [lhs, rhs] = reproducing_check(P1, table);
            CHECK(lhs == rhs);
            const CliffPoly expect = CliffPoly::variable(m, VarRole::U, 1) -
                                     CliffPoly::variable(m, VarRole::U, 2).mul_left(e12);
            CHECK(lhs == expect);
        }
        for (int k = 0; k <= 3; ++k) {
            const CliffPoly P = random_monogenic(rng, m, k);
            const auto [l1, r1] = reproducing_check(P, table, ReproducingKernel::ZonalDegree);
            CHECK(l1 == r1);
            const auto [l2, r2] =
                reproducing_check(P, table, ReproducingKernel::TruncatedFourierBorel);
            CHECK(l2 == r2);
        }
    }
}

TEST_CASE("bs kernel assembly") {
    const int m = 2;
    const ZonalTable table = build_zonal_table(m, 4, ZonalRoute::Fischer, VarRole::Z, VarRole::X);
    // s = 1: just the truncated E_0
    CHECK(bs_kernel(1, 4, table) == fourier_borel_truncation(0, 4, table).value);
    // s = 2: E_0 + z E_1 x
    BiPoly e1x = fourier_borel_truncation(1, 4, table).value;
    e1x = vector_mul(Slot::Second, Side::Right, e1x);
    e1x = vector_mul(Slot::First, Side::Left, e1x);
    CHECK(bs_kernel(2, 4, table) == fourier_borel_truncation(0, 4, table).value + e1x);
    CHECK_THROWS_AS(bs_kernel(0, 4, table), std::invalid_argument);
    CHECK_THROWS_AS(bs_kernel(5, 4, table), std::invalid_argument);
}

TEST_CASE("bs kernel equals the projected series") {
    for (int m = 2; m <= 3; ++m) {
        const ZonalTable table =
            build_zonal_table(m, 4, ZonalRoute::Fischer, VarRole::Z, VarRole::X);
        for (int s = 1; s <= 3; ++s)
            for (int K = s; K <= 4; ++K)
                CHECK(bs_kernel(s, K, table) == bs_kernel_from_series(s, K, m));
    }
}

TEST_CASE("weierstrass reproduction") {
    Rng rng(71);
    for (int m = 2; m <= 3; ++m) {
        const ZonalTable table =
            build_zonal_table(m, 6, ZonalRoute::Fischer, VarRole::Z, VarRole::X);
        // s=1, g monogenic: both sides are g(z)
        for (int k = 0; k <= 3; ++k) {
            const CliffPoly g = random_monogenic(rng, m, k);
            const auto [lhs, rhs] = weierstrass_kernel_check(g, 1, 6, table);
            CHECK(lhs == rhs);
            CHECK(lhs == g.with_role(VarRole::Z));
        }
        // g = 1
        const CliffPoly one = CliffPoly::scalar_constant(m, VarRole::X, CRational(1));
        {
            const auto [lhs, rhs] = weierstrass_kernel_check(one, 1, 6, table);
            CHECK(lhs == one.with_role(VarRole::Z));
            CHECK(rhs == lhs);
        }
        // g = x P_1, s = 2
        {
            const CliffPoly g = vector_mul(Side::Left, random_monogenic(rng, m, 1));
            const auto [lhs, rhs] = weierstrass_kernel_check(g, 2, 6, table);
            CHECK(lhs == rhs);
        }
        // not s-monogenic -> precondition error
        const CliffPoly bad = vector_mul(Side::Left, random_monogenic(rng, m, 1));
        CHECK_THROWS_AS(weierstrass_kernel_check(bad, 1, 6, table), std::invalid_argument);
    }
}
