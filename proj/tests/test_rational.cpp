#include <catch2/catch_amalgamated.hpp>

#include "stabmc/rational.hpp"

using stabmc::Rational;

TEST_CASE("rational arithmetic and normalization", "[rational]") {
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(Rational(-2, -4) == Rational(1, 2));
    REQUIRE(Rational(2, -4) == Rational(-1, 2));
    REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    REQUIRE(Rational(1, 2) - Rational(1, 2) == Rational(0));
    REQUIRE(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    REQUIRE(-Rational(1, 2) == Rational(-1, 2));
}

TEST_CASE("rational comparisons are exact", "[rational]") {
    REQUIRE(Rational(1, 2) <= Rational(1, 2));
    REQUIRE_FALSE(Rational(1, 2) < Rational(1, 2));
    REQUIRE(Rational(4999, 10000) < Rational(1, 2));
    REQUIRE(Rational(1, 2) > Rational(4999, 10000));
    REQUIRE(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("decimal literals parse exactly", "[rational]") {
    REQUIRE(Rational::from_decimal("0.5") == Rational(1, 2));
    REQUIRE(Rational::from_decimal("0.4999") == Rational(4999, 10000));
    REQUIRE(Rational::from_decimal("2") == Rational(2));
    REQUIRE(Rational::from_decimal("1.25") == Rational(5, 4));
}

TEST_CASE("power-of-two helper", "[rational]") {
    REQUIRE(Rational::from_pow2(1, 1) == Rational(1, 2));
    REQUIRE(Rational::from_pow2(3, 2) == Rational(3, 4));
    REQUIRE(Rational::from_pow2(0, 0) == Rational(0));
    REQUIRE(Rational::from_pow2(1, 0) == Rational(1));
}

TEST_CASE("overflow is reported, not wrapped", "[rational]") {
    Rational big(INT64_MAX, 1);
    REQUIRE_THROWS_AS(big * big, std::overflow_error);
}
