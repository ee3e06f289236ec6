#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monoclif/calculus.hpp"
#include "monoclif/kernels.hpp"
#include "monoclif/verify.hpp"

using namespace monoclif;

namespace {
CliffPoly axis_wave(int m, int k) {
    const auto frames = orthonormal_frames(m, 1);
    return plane_wave(frames[0].first, frames[0].second, k);
}
} // namespace

TEST_CASE("dirac on simple inputs") {
    const int m = 2;
    const CliffPoly x1 = CliffPoly::variable(m, VarRole::X, 1);
    CHECK(dirac_left(x1) == CliffPoly::constant(MultiVector::generator(m, 1), VarRole::X));

    // d(x1 - e1e2 x2) = e1 - e2 e1 e2 = 0 (the k=1 plane wave is monogenic)
    const MultiVector e12 = MultiVector::generator(m, 1) * MultiVector::generator(m, 2);
    const CliffPoly p = x1 - CliffPoly::variable(m, VarRole::X, 2).mul_left(e12);
    CHECK(dirac_left(p).is_zero());

    // d(sum x_j^2) = 2x
    CliffPoly norm(m, VarRole::X);
    for (int j = 0; j < m; ++j) {
        Monomial mono = Monomial::unit(m);
        mono.exps[j] = 2;
        norm.add_term(mono, MultiVector::scalar(m, CRational(1)));
    }
    CHECK(dirac_left(norm) == CliffPoly::vector_variable(m, VarRole::X).scaled(Rational(2)));
}

TEST_CASE("right dirac") {
    const int m = 2;
    const CliffPoly u1 = CliffPoly::variable(m, VarRole::U, 1);
    CHECK(dirac_right(u1) == CliffPoly::constant(MultiVector::generator(m, 1), VarRole::U));

    // (<x,u>) d_u = x as a bipoly identity
    const BiPoly dot = dot_power_kernel(1, m, VarRole::X, VarRole::U);
    const BiPoly expect =
        BiPoly::embed(CliffPoly::vector_variable(m, VarRole::X), Slot::First, VarRole::U);
    CHECK(dirac_right(dot, Slot::Second) == expect);

    // Z_1 satisfies the right-sided equation too
    const BiPoly z1 = zonal_fischer(1, 3)[0];
    CHECK(dirac_right(z1, Slot::Second).is_zero());
    CHECK(dirac_left(z1, Slot::First).is_zero());
}

TEST_CASE("laplacian") {
    const int m = 3;
    const CliffPoly x1 = CliffPoly::variable(m, VarRole::X, 1);
    CHECK(laplacian(x1 * x1) == CliffPoly::scalar_constant(m, VarRole::X, CRational(2)));
    Rng rng(13);
    for (int i = 0; i < 8; ++i) {
        CliffPoly p(m, VarRole::X);
        for (int d = 0; d <= 4; ++d)
            if (rng.coin()) p += random_homogeneous(rng, m, d);
        CHECK(laplacian(p) == -dirac_left(dirac_left(p)));
    }
    for (int k = 0; k <= 4; ++k) CHECK(laplacian(axis_wave(m, k)).is_zero());
}

TEST_CASE("weighted dirac") {
    const int m = 3;
    const CliffPoly one = CliffPoly::scalar_constant(m, VarRole::X, CRational(1));
    const GaussianSection g(one, Rational(1, 2));
    const GaussianSection dg = weighted_dirac(g);
    CHECK(dg.weight_c == Rational(1, 2));
    CHECK(dg.poly == -CliffPoly::vector_variable(m, VarRole::X));

    for (int k = 1; k <= 3; ++k) {
        const CliffPoly P = axis_wave(m, k);
        const GaussianSection s(P, Rational(1, 2));
        CHECK(weighted_dirac(s).poly == -vector_mul(Side::Left, P));
        // twice: ((2k+m) - |x|^2) P_k
        const GaussianSection dd = weighted_dirac(weighted_dirac(s));
        CliffPoly expect = P.scaled(Rational(2 * k + m));
        CliffPoly norm(m, VarRole::X);
        for (int j = 0; j < m; ++j) {
            Monomial mono = Monomial::unit(m);
            mono.exps[j] = 2;
            norm.add_term(mono, MultiVector::scalar(m, CRational(1)));
        }
        expect -= norm * P;
        CHECK(dd.poly == expect);
    }
    CHECK_THROWS_AS(GaussianSection(one, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(GaussianSection(one, Rational(-1, 4)), std::invalid_argument);
}

TEST_CASE("euler degree classification") {
    const int m = 2;
    const CliffPoly x1 = CliffPoly::variable(m, VarRole::X, 1);
    const CliffPoly x2 = CliffPoly::variable(m, VarRole::X, 2);
    CHECK(euler_degree(x1 * x2) == 2);
    CHECK(!euler_degree(CliffPoly::scalar_constant(m, VarRole::X, CRational(1)) + x1));
    CHECK(euler_degree(axis_wave(m, 3)) == 3);
    CHECK(euler_degree(CliffPoly(m, VarRole::X)) == 0);

    // the operator route agrees: sum x_j d_j p = k p
    Rng rng(17);
    for (int i = 0; i < 6; ++i) {
        const int k = rng.uniform(0, 4);
        const CliffPoly p = random_homogeneous(rng, m, k);
        CliffPoly euler(m, VarRole::X);
        for (int j = 1; j <= m; ++j)
            euler += CliffPoly::variable(m, VarRole::X, j) * p.derivative(j);
        CHECK(euler == p.scaled(Rational(k)));
    }
}
