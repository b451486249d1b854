#include "stakesim/rational.hpp"

#include <doctest.h>

using namespace stakesim;

TEST_CASE("protocol rates are exactly representable")
{
    CHECK(Rational::parse("10%") == Rational(1, 10));
    CHECK(Rational::parse("8%") == Rational(2, 25));
    CHECK(Rational::parse("9%") == Rational(9, 100));
    CHECK(Rational::parse("12.5%") == Rational(1, 8));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("1/8") == Rational(1, 8));
    CHECK(Rational::parse("3") == Rational(3, 1));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rationals stay in lowest terms")
{
    Rational r(50, 100);
    CHECK(r.num() == 1);
    CHECK(r.den() == 2);
    CHECK((Rational(1, 3) * Rational(3, 5)) == Rational(1, 5));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) - Rational(1, 3)) == Rational(1, 6));
    CHECK((Rational(3, 4) / Rational(3, 2)) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 3) - Rational(1, 2), std::underflow_error);
}

TEST_CASE("comparison is exact for huge operands")
{
    u128 big = (u128(1) << 120) + 7;
    CHECK(Rational(big, big - 1) > Rational(big - 1, big));
    CHECK(Rational(big, big) == Rational(1, 1));
    CHECK(Rational(big - 1, big) < Rational(1, 1));
    CHECK(Rational(1, big) < Rational(2, big));
    CHECK(Rational(0, 5) < Rational(1, big));
    // 1/3 < 2/5 needs the recursion depth > 1.
    CHECK(Rational(1, 3) < Rational(2, 5));
    CHECK(Rational(7, 3) > Rational(9, 4));
}

TEST_CASE("percentage rendering rounds half-even")
{
    CHECK(Rational(1, 4).to_percent_string(3) == "25.000");
    CHECK(Rational(0, 5).to_percent_string(3) == "0.000");
    // Ties: 0.0125% at 3 decimals is exactly between 0.012 and 0.013.
    CHECK(Rational(125, 1'000'000).to_percent_string(3) == "0.012");
    CHECK(Rational(375, 1'000'000).to_percent_string(3) == "0.038");
    CHECK(Rational(1, 3).to_percent_string(0) == "33");
    CHECK(Rational(1, 1).to_percent_string(2) == "100.00");
    CHECK(Rational(1, 8).to_decimal_string(3) == "0.125");
    CHECK(Rational(1, 8).to_decimal_string(2) == "0.12"); // half-even tie
}
