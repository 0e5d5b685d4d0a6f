#include <doctest.h>

#include "seshadri/rational.hpp"

using namespace seshadri;

TEST_CASE("rationals are stored reduced with positive denominator") {
    Rational q(Int(6), Int(-4));
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(q.str() == "-3/2");

    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(8, 2).str() == "4");
    CHECK(Rational(8, 2).is_integer());
}

TEST_CASE("rational parsing accepts p and p/q") {
    CHECK(Rational::parse("4/3") == Rational(4, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK_THROWS_AS(Rational::parse("x"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), DomainError);
}

TEST_CASE("rational arithmetic and ordering") {
    Rational a(4, 3), b(2, 3);
    CHECK(a + b == Rational(2));
    CHECK(a - b == b);
    CHECK(a * b == Rational(8, 9));
    CHECK(a / b == Rational(2));
    CHECK(a > b);
    CHECK(Rational(16, 9) < Rational(2));
    CHECK_THROWS_AS(a / Rational(0), DomainError);
}

TEST_CASE("rational powers stay reduced") {
    CHECK(Rational(4, 3).pow(2) == Rational(16, 9));
    CHECK(Rational(2, 7).pow(3) == Rational(8, 343));
    CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("factorial and power-of-two helpers") {
    CHECK(factorial(2) == 2);
    CHECK(factorial(6) == 720);
    CHECK(pow2(5) == 32);
    CHECK(pow2(0) == 1);
}
