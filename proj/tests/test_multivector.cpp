#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monoclif/multivector.hpp"
#include "monoclif/prng.hpp"

using namespace monoclif;

namespace {
MultiVector rand_mv(Rng& rng, int m) {
    MultiVector v(m);
    const int n = rng.uniform(1, 8);
    for (int i = 0; i < n; ++i)
        v.add_term(static_cast<BladeMask>(rng.uniform(0, (1 << m) - 1)), rng.small_crational());
    return v;
}
} // namespace

TEST_CASE("generator relations") {
    const int m = 3;
    const MultiVector e1 = MultiVector::generator(m, 1);
    const MultiVector e2 = MultiVector::generator(m, 2);
    CHECK(e1 * e1 == MultiVector::scalar(m, CRational(-1)));
    CHECK(e1 * e2 == MultiVector::blade(m, 0b11, CRational(1)));
    CHECK(e2 * e1 == MultiVector::blade(m, 0b11, CRational(-1)));
    const MultiVector one = MultiVector::scalar(m, CRational(1));
    const MultiVector a = e1 * e2 + e2.scaled(Rational(5, 3));
    CHECK(one * a == a);
    CHECK(a * one == a);
}

TEST_CASE("dimension mismatch is an error") {
    CHECK_THROWS_AS(MultiVector::generator(2, 1) * MultiVector::generator(3, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(MultiVector(1), std::invalid_argument);
    CHECK_THROWS_AS(MultiVector(9), std::invalid_argument);
    CHECK_THROWS_AS(MultiVector::generator(2, 3), std::invalid_argument);
}

TEST_CASE("conjugation") {
    const int m = 4;
    const MultiVector e1 = MultiVector::generator(m, 1);
    const MultiVector e12 = e1 * MultiVector::generator(m, 2);
    CHECK(e1.conjugate() == -e1);
    CHECK(e12.conjugate() == -e12);
    CHECK(MultiVector::scalar(m, CRational(1)).conjugate() ==
          MultiVector::scalar(m, CRational(1)));
    // grade 3 blades flip sign, grade 4 stay
    const MultiVector e123 = e12 * MultiVector::generator(m, 3);
    const MultiVector e1234 = e123 * MultiVector::generator(m, 4);
    CHECK(e123.conjugate() == e123);
    CHECK(e1234.conjugate() == e1234);

    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        const MultiVector a = rand_mv(rng, m), b = rand_mv(rng, m);
        CHECK((a * b).conjugate() == b.conjugate() * a.conjugate());
    }
}

TEST_CASE("hermitian conjugation") {
    const int m = 2;
    const MultiVector i_one = MultiVector::scalar(m, CRational(Rational(0), Rational(1)));
    CHECK(i_one.hermitian_conjugate() ==
          MultiVector::scalar(m, CRational(Rational(0), Rational(-1))));
    const MultiVector e1 = MultiVector::generator(m, 1);
    CHECK(e1.hermitian_conjugate() == -e1);
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        const MultiVector c = rand_mv(rng, m), d = rand_mv(rng, m);
        CHECK(c.hermitian_conjugate().hermitian_conjugate() == c);
        CHECK((c * d).hermitian_conjugate() ==
              d.hermitian_conjugate() * c.hermitian_conjugate());
    }
}

TEST_CASE("dot and wedge of 1-vectors") {
    const int m = 3;
    const MultiVector e1 = MultiVector::generator(m, 1);
    const MultiVector e2 = MultiVector::generator(m, 2);
    {
        const auto [d, w] = dot_and_wedge(e1, e1);
        CHECK(d == CRational(1));
        CHECK(w.is_zero());
    }
    {
        const auto [d, w] = dot_and_wedge(e1, e2);
        CHECK(d.is_zero());
        CHECK(w == MultiVector::blade(m, 0b11, CRational(1)));
    }
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        MultiVector x(m), y(m);
        for (int j = 1; j <= m; ++j) {
            x += MultiVector::generator(m, j).scaled(rng.small_crational());
            y += MultiVector::generator(m, j).scaled(rng.small_crational());
        }
        const auto [dxy, wxy] = dot_and_wedge(x, y);
        const auto [dyx, wyx] = dot_and_wedge(y, x);
        CHECK(dxy == dyx);
        CHECK(wxy == -wyx);
        CHECK(x * y == MultiVector::scalar(m, -dxy) + wxy);
    }
    CHECK_THROWS_AS(dot_and_wedge(e1 * e2, e1), std::invalid_argument);
}

TEST_CASE("associativity and vector squares") {
    Rng rng(19);
    for (int m = 2; m <= 4; ++m) {
        for (int i = 0; i < 15; ++i) {
            const MultiVector a = rand_mv(rng, m), b = rand_mv(rng, m), c = rand_mv(rng, m);
            CHECK((a * b) * c == a * (b * c));
        }
        MultiVector x(m);
        Rational norm = 0;
        for (int j = 1; j <= m; ++j) {
            const Rational r = rng.small_rational();
            norm += r * r;
            x += MultiVector::generator(m, j).scaled(r);
        }
        CHECK(x * x == MultiVector::scalar(m, CRational(-norm)));
        const MultiVector pos = x.hermitian_conjugate() * x;
        CHECK(pos.scalar_part().re >= Rational(0));
    }
}

TEST_CASE("blade bookkeeping") {
    CHECK(blade_grade(0b1011) == 3);
    CHECK(blade_from_indices({1, 3}, 3) == 0b101);
    CHECK(blade_indices(0b101) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(blade_from_indices({1, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(blade_from_indices({4}, 3), std::invalid_argument);
    CHECK(blade_str(0) == "1");
    CHECK(blade_str(0b110) == "e23");
}
