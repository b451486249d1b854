#include "stakesim/amount.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace stakesim {
namespace detail {

std::string u128_to_string(u128 v)
{
    if (v == 0)
        return "0";
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

u128 parse_u128(std::string_view digits)
{
    if (digits.empty())
        throw std::invalid_argument("empty integer literal");
    u128 v = 0;
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("non-digit in integer literal");
        v = checked_mul_u128(v, 10);
        v = checked_add_u128(v, static_cast<u128>(c - '0'));
    }
    return v;
}

u128 checked_add_u128(u128 a, u128 b)
{
    u128 r = a + b;
    if (r < a)
        throw std::overflow_error("token amount addition overflow");
    return r;
}

u128 checked_sub_u128(u128 a, u128 b)
{
    if (b > a)
        throw std::overflow_error("token amount subtraction underflow");
    return a - b;
}

u128 checked_mul_u128(u128 a, u128 b)
{
    if (a == 0 || b == 0)
        return 0;
    u128 r = a * b;
    if (r / a != b)
        throw std::overflow_error("token amount multiplication overflow");
    return r;
}

namespace {

struct U256 {
    u128 hi;
    u128 lo;
};

U256 umul_256(u128 a, u128 b)
{
    const u128 mask = (static_cast<u128>(1) << 64) - 1;
    u128 a_lo = a & mask, a_hi = a >> 64;
    u128 b_lo = b & mask, b_hi = b >> 64;

    u128 ll = a_lo * b_lo;
    u128 lh = a_lo * b_hi;
    u128 hl = a_hi * b_lo;
    u128 hh = a_hi * b_hi;

    u128 mid = (ll >> 64) + (lh & mask) + (hl & mask);
    U256 r;
    r.lo = (ll & mask) | (mid << 64);
    r.hi = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    return r;
}

// Restoring long division of a 256-bit dividend by a 128-bit divisor.
// Throws if the quotient needs more than 128 bits.
u128 udiv_256_by_128(U256 n, u128 d)
{
    if (d == 0)
        throw std::domain_error("division by zero");
    if (n.hi == 0)
        return n.lo / d;
    if (n.hi >= d)
        throw std::overflow_error("quotient exceeds 128 bits");

    u128 rem = n.hi; // rem < d at every iteration
    u128 q = 0;
    for (int i = 127; i >= 0; --i) {
        u128 carry = rem >> 127;
        rem = (rem << 1) | ((n.lo >> i) & 1);
        if (carry != 0 || rem >= d) {
            rem -= d;
            q |= static_cast<u128>(1) << i;
        }
    }
    return q;
}

} // namespace

u128 mul_div_floor(u128 value, u128 num, u128 den)
{
    if (den == 0)
        throw std::domain_error("division by zero in mul_div");
    if (value == 0 || num == 0)
        return 0;
    u128 prod = value * num;
    if (prod / value == num)
        return prod / den;
    return udiv_256_by_128(umul_256(value, num), den);
}

u128 gcd_u128(u128 a, u128 b)
{
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

u128 atoms_per_token()
{
    u128 v = 1;
    for (int i = 0; i < TokenAmount::kFractionDigits; ++i)
        v *= 10;
    return v;
}

TokenAmount TokenAmount::from_tokens(u64 whole_tokens)
{
    return TokenAmount(
        detail::checked_mul_u128(whole_tokens, atoms_per_token()));
}

TokenAmount TokenAmount::parse(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty token amount");
    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac =
        dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty())
        throw std::invalid_argument("malformed token amount");
    if (frac.size() > kFractionDigits)
        throw std::invalid_argument(
            "token amount has more than 18 fractional digits");

    u128 atoms = whole.empty() ? 0 : detail::parse_u128(whole);
    atoms = detail::checked_mul_u128(atoms, atoms_per_token());
    if (!frac.empty()) {
        u128 f = detail::parse_u128(frac);
        for (size_t i = frac.size(); i < kFractionDigits; ++i)
            f = detail::checked_mul_u128(f, 10);
        atoms = detail::checked_add_u128(atoms, f);
    }
    return TokenAmount(atoms);
}

std::string TokenAmount::to_string() const
{
    std::string fixed = to_string_fixed();
    size_t last = fixed.find_last_not_of('0');
    if (fixed[last] == '.')
        return fixed.substr(0, last);
    return fixed.substr(0, last + 1);
}

std::string TokenAmount::to_string_fixed() const
{
    u128 scale = atoms_per_token();
    std::string whole = detail::u128_to_string(atoms_ / scale);
    std::string frac = detail::u128_to_string(atoms_ % scale);
    frac.insert(frac.begin(), kFractionDigits - frac.size(), '0');
    return whole + "." + frac;
}

SignedAmount SignedAmount::difference(TokenAmount a, TokenAmount b)
{
    if (a >= b)
        return {false, a - b};
    return {true, b - a};
}

std::string SignedAmount::to_string() const
{
    if (is_zero())
        return magnitude.to_string();
    return (negative ? "-" : "") + magnitude.to_string();
}

bool SignedAmount::operator<(const SignedAmount& rhs) const
{
    if (negative != rhs.negative)
        return negative && !is_zero();
    if (negative)
        return rhs.magnitude < magnitude;
    return magnitude < rhs.magnitude;
}

} // namespace stakesim
