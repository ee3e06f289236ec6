#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monoclif/rational.hpp"

using namespace monoclif;

TEST_CASE("rational arithmetic stays canonical") {
    const Rational a(2, 4);
    CHECK(a.str() == "1/2");
    CHECK(a == Rational(1, 2));
    CHECK((a + a).str() == "1/1");
    CHECK((a - a).is_zero());
    CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
    CHECK((Rational(1, 3) / Rational(2, 5)) == Rational(5, 6));
    CHECK(Rational(-4, 8).str() == "-1/2");
    CHECK(Rational(3, -6) == Rational(-1, 2));
}

TEST_CASE("rational comparisons and helpers") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1).sign() == -1);
    CHECK(Rational(7, 3).inverse() == Rational(3, 7));
    CHECK(Rational(-2, 3).abs() == Rational(2, 3));
    CHECK(pow(Rational(1, 2), 3) == Rational(1, 8));
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(double_factorial(-1) == Rational(1));
    CHECK(double_factorial(5) == Rational(15));
    CHECK(double_factorial(6) == Rational(48));
}

TEST_CASE("rational parsing") {
    CHECK(Rational::from_string("5/1") == Rational(5));
    CHECK(Rational::from_string("-7/14") == Rational(-1, 2));
    CHECK(Rational::from_string("12") == Rational(12));
    CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("abc"), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1).inverse() / Rational(0), std::domain_error);
}

TEST_CASE("complex rationals") {
    const CRational i(Rational(0), Rational(1));
    CHECK((i * i) == CRational(Rational(-1)));
    CHECK(i.conj() == CRational(Rational(0), Rational(-1)));
    const CRational z(Rational(1, 2), Rational(-3, 4));
    CHECK((z * z.conj()).im.is_zero());
    CHECK((z + (-z)).is_zero());
    CHECK(z.str() == "(1/2-3/4i)");
    CHECK(CRational(Rational(2)).str() == "2/1");
}
