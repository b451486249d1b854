#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stakesim {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

namespace detail {

std::string u128_to_string(u128 v);
u128 parse_u128(std::string_view digits);

u128 checked_add_u128(u128 a, u128 b);
u128 checked_sub_u128(u128 a, u128 b);
u128 checked_mul_u128(u128 a, u128 b);

/// floor(value * num / den), exact even when value*num exceeds 128 bits.
/// Throws std::overflow_error if the quotient does not fit in 128 bits.
u128 mul_div_floor(u128 value, u128 num, u128 den);

u128 gcd_u128(u128 a, u128 b);

} // namespace detail

/// Quantity of the native token, stored as an integer count of 10^-18
/// token units ("atoms"). Ledger arithmetic is exact and checked:
/// overflow or underflow throws, never wraps.
class TokenAmount {
public:
    static constexpr int kFractionDigits = 18;

    constexpr TokenAmount() = default;

    static TokenAmount from_atoms(u128 atoms) { return TokenAmount(atoms); }
    static TokenAmount from_tokens(u64 whole_tokens);

    /// Parses a non-negative decimal token count, e.g. "10000000" or
    /// "0.0002". At most 18 fractional digits are accepted.
    static TokenAmount parse(std::string_view text);

    u128 atoms() const { return atoms_; }
    bool is_zero() const { return atoms_ == 0; }

    TokenAmount operator+(TokenAmount rhs) const
    {
        return TokenAmount(detail::checked_add_u128(atoms_, rhs.atoms_));
    }
    TokenAmount operator-(TokenAmount rhs) const
    {
        return TokenAmount(detail::checked_sub_u128(atoms_, rhs.atoms_));
    }
    TokenAmount& operator+=(TokenAmount rhs) { return *this = *this + rhs; }
    TokenAmount& operator-=(TokenAmount rhs) { return *this = *this - rhs; }

    TokenAmount mul(u128 factor) const
    {
        return TokenAmount(detail::checked_mul_u128(atoms_, factor));
    }

    /// floor(amount * num / den); exact rational scaling.
    TokenAmount mul_div(u128 num, u128 den) const
    {
        return TokenAmount(detail::mul_div_floor(atoms_, num, den));
    }

    auto operator<=>(const TokenAmount&) const = default;

    /// Canonical trimmed decimal ("1.5", "0.0002", "42").
    std::string to_string() const;
    /// Full 18-fractional-digit rendering.
    std::string to_string_fixed() const;
    /// Raw atom count as decimal digits.
    std::string atoms_string() const { return detail::u128_to_string(atoms_); }

private:
    explicit constexpr TokenAmount(u128 atoms) : atoms_(atoms) {}
    u128 atoms_ = 0;
};

u128 atoms_per_token();

/// Signed token quantity for net-growth style results (burn can exceed
/// issuance). Magnitude is an exact TokenAmount.
struct SignedAmount {
    bool negative = false;
    TokenAmount magnitude;

    static SignedAmount of(TokenAmount a) { return {false, a}; }
    static SignedAmount minus(TokenAmount a)
    {
        return {!a.is_zero(), a};
    }
    /// a - b as a signed value.
    static SignedAmount difference(TokenAmount a, TokenAmount b);

    bool is_zero() const { return magnitude.is_zero(); }
    std::string to_string() const;

    bool operator==(const SignedAmount&) const = default;
    bool operator<(const SignedAmount& rhs) const;
};

} // namespace stakesim
