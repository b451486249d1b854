#include "stakesim/amount.hpp"

#include <doctest.h>

using namespace stakesim;

TEST_CASE("token amounts parse and render canonically")
{
    CHECK(TokenAmount::parse("0").atoms() == 0);
    CHECK(TokenAmount::parse("1").atoms() == atoms_per_token());
    CHECK(TokenAmount::parse("0.0002").atoms() ==
          atoms_per_token() / 10000 * 2);
    CHECK(TokenAmount::parse("10000000").to_string() == "10000000");
    CHECK(TokenAmount::parse("1.50").to_string() == "1.5");
    CHECK(TokenAmount::parse("0.000000009523809523").atoms() ==
          u128(9523809523ULL));

    // Display: trimmed decimal or the full 18 fractional digits.
    TokenAmount a = TokenAmount::parse("1.5");
    CHECK(a.to_string_fixed() == "1.500000000000000000");
    CHECK(TokenAmount::from_atoms(1).to_string() == "0.000000000000000001");

    CHECK_THROWS_AS(TokenAmount::parse("0.0000000000000000001"),
                    std::invalid_argument); // 19 fractional digits
    CHECK_THROWS_AS(TokenAmount::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(TokenAmount::parse(""), std::invalid_argument);
}

TEST_CASE("arithmetic is checked, never wrapping")
{
    TokenAmount max = TokenAmount::from_atoms(~u128(0));
    CHECK_THROWS_AS(max + TokenAmount::from_atoms(1), std::overflow_error);
    CHECK_THROWS_AS(TokenAmount::from_atoms(0) - TokenAmount::from_atoms(1),
                    std::overflow_error);
    CHECK_THROWS_AS(max.mul(2), std::overflow_error);
    CHECK((max - max).is_zero());
}

TEST_CASE("mul_div_floor is exact through the 256-bit path")
{
    // Small path agrees with plain arithmetic.
    CHECK(detail::mul_div_floor(100, 3, 7) == 42);
    CHECK(detail::mul_div_floor(0, 123, 7) == 0);

    // Large path: value*num overflows 128 bits but the quotient fits.
    u128 big = u128(1) << 100;
    CHECK(detail::mul_div_floor(big, big, big) == big);
    CHECK(detail::mul_div_floor(big, 9, 8) == big / 8 * 9 + (big % 8) * 9 / 8);

    // Cross-check 256-bit division against the decomposition
    // a*num/den = (a/den)*num + (a%den)*num/den for den | results.
    u128 a = (u128(0x0123456789abcdefULL) << 64) | 0xfedcba9876543210ULL;
    u128 num = (u128(3) << 64) | 0x1234;
    u128 den = num * 2 + 1;
    u128 q = detail::mul_div_floor(a, num, den);
    // Verify q*den <= a*num < (q+1)*den via the same 256-bit multiply.
    CHECK(detail::mul_div_floor(q, den, num) <= a);
    CHECK(a <= detail::mul_div_floor(q + 1, den, num) + 1);

    CHECK_THROWS_AS(detail::mul_div_floor(~u128(0), ~u128(0), 1),
                    std::overflow_error);
    CHECK_THROWS_AS(detail::mul_div_floor(1, 1, 0), std::domain_error);
}

TEST_CASE("signed amounts")
{
    auto plus = SignedAmount::of(TokenAmount::from_tokens(5));
    auto minus = SignedAmount::difference(TokenAmount::from_tokens(1),
                                          TokenAmount::from_tokens(3));
    CHECK(minus.negative);
    CHECK(minus.magnitude == TokenAmount::from_tokens(2));
    CHECK(minus.to_string() == "-2");
    CHECK(minus < plus);
    CHECK(SignedAmount::difference(TokenAmount{}, TokenAmount{}).to_string() ==
          "0");
}
