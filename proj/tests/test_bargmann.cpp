#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monoclif/bargmann.hpp"
#include "monoclif/hermite.hpp"
#include "monoclif/kernels.hpp"
#include "monoclif/verify.hpp"

using namespace monoclif;

namespace {
CliffPoly wave(int m, int k) {
    const auto frames = orthonormal_frames(m, 1);
    return plane_wave(frames[0].first, frames[0].second, k);
}
} // namespace

TEST_CASE("gaussian moments") {
    CHECK(gaussian_moment(Monomial::unit(3)) == Rational(1));
    CHECK(gaussian_moment(Monomial{{2, 0, 0}}) == Rational(1));
    CHECK(gaussian_moment(Monomial{{1, 0, 0}}) == Rational(0));
    CHECK(gaussian_moment(Monomial{{4, 2, 0}}) == Rational(3));
    CHECK(gaussian_moment_1d(6) == Rational(15));
    // 1D recursion oracle mu_{2n} = (2n-1) mu_{2n-2}
    Rational mu = 1;
    for (int n = 1; n <= 6; ++n) {
        mu *= Rational(2 * n - 1);
        CHECK(gaussian_moment_1d(2 * n) == mu);
    }
}

TEST_CASE("1d transform: B[psi_k] = z^k") {
    for (int k = 0; k <= 8; ++k)
        CHECK(transform_1d(scalar_hermite(k)) == ScalarPoly::monomial(k));
}

TEST_CASE("l2 inner product on sections") {
    const int m = 2;
    const CliffPoly one = CliffPoly::scalar_constant(m, VarRole::X, CRational(1));
    const GaussianSection f(one, Rational(1, 4));
    CHECK(l2_inner_product(f, f) == MultiVector::scalar(m, CRational(1)));
    CHECK_THROWS_AS(l2_inner_product(f, GaussianSection(one, Rational(1, 2))),
                    std::invalid_argument);
    // 1D orthogonality seen through the multi-index sections
    const GaussianSection psi1(multi_hermite({1, 0}), Rational(1, 4));
    const GaussianSection psi2(multi_hermite({2, 0}), Rational(1, 4));
    CHECK(l2_inner_product(psi1, psi2).is_zero());
    CHECK(l2_inner_product(psi2, psi2) == MultiVector::scalar(m, CRational(2)));
}

TEST_CASE("segal-bargmann on multi-index basis") {
    for (int m = 2; m <= 3; ++m) {
        std::vector<std::vector<int>> tuples;
        if (m == 2)
            tuples = {{0, 0}, {1, 0}, {2, 3}, {0, 5}};
        else
            tuples = {{0, 0, 0}, {1, 1, 1}, {2, 0, 3}};
        for (const auto& ks : tuples) {
            const GaussianSection f(multi_hermite(ks), Rational(1, 4));
            Monomial mono = Monomial::unit(m);
            mono.exps.assign(ks.begin(), ks.end());
            CliffPoly expect(m, VarRole::Z);
            expect.add_term(mono, MultiVector::scalar(m, CRational(1)));
            CHECK(segal_bargmann(f) == expect);
        }
    }
    const CliffPoly one = CliffPoly::scalar_constant(2, VarRole::X, CRational(1));
    CHECK_THROWS_AS(segal_bargmann(GaussianSection(one, Rational(1, 2))), std::invalid_argument);
}

TEST_CASE("axis plane waves transform to themselves") {
    for (int m = 2; m <= 3; ++m)
        for (int k = 0; k <= 5; ++k) {
            const CliffPoly P = wave(m, k);
            CHECK(segal_bargmann(GaussianSection(P, Rational(1, 4))) == P.with_role(VarRole::Z));
        }
}

TEST_CASE("heat route equals moment route") {
    Rng rng(47);
    for (int m = 2; m <= 3; ++m)
        for (int i = 0; i < 6; ++i) {
            CliffPoly P(m, VarRole::X);
            for (int d = 0; d <= 5; ++d)
                if (rng.coin()) P += random_homogeneous(rng, m, d);
            const GaussianSection f(P, Rational(1, 4));
            CHECK(segal_bargmann(f) == segal_bargmann_moments(f));
        }
}

TEST_CASE("bargmann inner product monomial rule") {
    const int m = 2;
    for (int l = 0; l <= 4; ++l)
        for (int k = 0; k <= 4; ++k) {
            CliffPoly zl(m, VarRole::Z), zk(m, VarRole::Z);
            Monomial a = Monomial::unit(m), b = Monomial::unit(m);
            a.exps[0] = l;
            b.exps[0] = k;
            zl.add_term(a, MultiVector::scalar(m, CRational(1)));
            zk.add_term(b, MultiVector::scalar(m, CRational(1)));
            CHECK(bargmann_inner_product(zl, zk) ==
                  MultiVector::scalar(m, CRational(l == k ? factorial(k) : Rational(0))));
        }
    const CliffPoly e1z1 =
        CliffPoly::variable(m, VarRole::Z, 1).mul_left(MultiVector::generator(m, 1));
    CHECK(bargmann_inner_product(e1z1, e1z1) == MultiVector::scalar(m, CRational(1)));
}

TEST_CASE("isometry on basis sections") {
    const int m = 2;
    const GaussianSection psi0(multi_hermite({0, 0}), Rational(1, 4));
    const GaussianSection psi1(multi_hermite({1, 0}), Rational(1, 4));
    const GaussianSection psi2(multi_hermite({2, 0}), Rational(1, 4));
    {
        const auto [l2, fock] = isometry_check(psi0, psi1);
        CHECK(l2.is_zero());
        CHECK(fock.is_zero());
    }
    {
        const auto [l2, fock] = isometry_check(psi2, psi2);
        CHECK(l2 == MultiVector::scalar(m, CRational(2)));
        CHECK(fock == l2);
    }
    // Clifford-valued sections
    Rng rng(53);
    for (int k = 0; k <= 2; ++k)
        for (int s = 0; s <= 2; ++s) {
            const CliffPoly P = random_monogenic(rng, m, k);
            const GaussianSection f = basis_section(s, k, P);
            const auto [l2, fock] = isometry_check(f, f);
            CHECK(l2 == fock);
        }
}

TEST_CASE("transform factorization both sides") {
    {
        // s=1, k=1, m=2: both sides are z (z1 - e1e2 z2)
        const int m = 2;
        const CliffPoly P = wave(m, 1);
        const auto [lhs, rhs] = transform_factorization_check(1, 1, P);
        CHECK(lhs == rhs);
        CHECK(lhs == vector_mul(Side::Left, P.with_role(VarRole::Z)));
    }
    Rng rng(59);
    for (int m = 2; m <= 3; ++m)
        for (int s = 0; s <= 2; ++s)
            for (int k = 0; k <= 2; ++k) {
                const CliffPoly P = random_monogenic(rng, m, k);
                const auto [lhs, rhs] = transform_factorization_check(s, k, P);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("monogenic part of the transform") {
    const int m = 3;
    const CliffPoly one = CliffPoly::scalar_constant(m, VarRole::X, CRational(1));
    CHECK(monogenic_part_of_transform(GaussianSection(one, Rational(1, 4))) ==
          one.with_role(VarRole::Z));
    // g = x transforms to z whose monogenic part vanishes
    const CliffPoly x = CliffPoly::vector_variable(m, VarRole::X);
    CHECK(monogenic_part_of_transform(GaussianSection(x, Rational(1, 4))).is_zero());
    for (int k = 0; k <= 3; ++k) {
        const CliffPoly P = wave(m, k);
        CHECK(monogenic_part_of_transform(GaussianSection(P, Rational(1, 4))) ==
              P.with_role(VarRole::Z));
    }
}

TEST_CASE("complex bargmann-fischer identity") {
    Rng rng(61);
    for (int m = 2; m <= 3; ++m)
        for (int i = 0; i < 5; ++i) {
            CliffPoly R(m, VarRole::X), S(m, VarRole::X);
            for (int d = 0; d <= 4; ++d) {
                if (rng.coin()) R += random_homogeneous(rng, m, d);
                if (rng.coin()) S += random_homogeneous(rng, m, d);
            }
            CHECK(fischer_inner_product(R, S) ==
                  bargmann_inner_product(R.with_role(VarRole::Z), S.with_role(VarRole::Z)));
        }
}
