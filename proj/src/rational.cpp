#include "stakesim/rational.hpp"

#include <utility>

namespace stakesim {

using detail::checked_add_u128;
using detail::checked_mul_u128;
using detail::gcd_u128;
using detail::mul_div_floor;
using detail::parse_u128;
using detail::u128_to_string;

Rational::Rational(u128 num, u128 den) : num_(num), den_(den)
{
    if (den_ == 0)
        throw std::domain_error("rational with zero denominator");
    u128 g = gcd_u128(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0)
        den_ = 1;
}

Rational Rational::parse(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    if (text.back() == '%') {
        Rational base = parse(text.substr(0, text.size() - 1));
        return base / Rational(100, 1);
    }
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        u128 n = parse_u128(text.substr(0, slash));
        u128 d = parse_u128(text.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        u128 den = 1;
        for (size_t i = 0; i < frac.size(); ++i)
            den = checked_mul_u128(den, 10);
        u128 num = whole.empty() ? 0 : parse_u128(whole);
        num = checked_mul_u128(num, den);
        if (!frac.empty())
            num = checked_add_u128(num, parse_u128(frac));
        return Rational(num, den);
    }
    return Rational(parse_u128(text), 1);
}

Rational Rational::operator+(const Rational& rhs) const
{
    u128 g = gcd_u128(den_, rhs.den_);
    u128 lhs_scale = rhs.den_ / g;
    u128 rhs_scale = den_ / g;
    u128 num = checked_add_u128(checked_mul_u128(num_, lhs_scale),
                                checked_mul_u128(rhs.num_, rhs_scale));
    return Rational(num, checked_mul_u128(den_, lhs_scale));
}

Rational Rational::operator-(const Rational& rhs) const
{
    if (*this < rhs)
        throw std::underflow_error("negative rational result");
    u128 g = gcd_u128(den_, rhs.den_);
    u128 lhs_scale = rhs.den_ / g;
    u128 rhs_scale = den_ / g;
    u128 num = checked_mul_u128(num_, lhs_scale) -
               checked_mul_u128(rhs.num_, rhs_scale);
    return Rational(num, checked_mul_u128(den_, lhs_scale));
}

Rational Rational::operator*(const Rational& rhs) const
{
    // Cross-reduce before multiplying to keep intermediates small.
    u128 g1 = gcd_u128(num_, rhs.den_);
    u128 g2 = gcd_u128(rhs.num_, den_);
    u128 num = checked_mul_u128(num_ / g1, rhs.num_ / g2);
    u128 den = checked_mul_u128(den_ / g2, rhs.den_ / g1);
    return Rational(num, den);
}

Rational Rational::operator/(const Rational& rhs) const
{
    if (rhs.num_ == 0)
        throw std::domain_error("division by zero rational");
    u128 g1 = gcd_u128(num_, rhs.num_);
    u128 g2 = gcd_u128(rhs.den_, den_);
    u128 num = checked_mul_u128(num_ / g1, rhs.den_ / g2);
    u128 den = checked_mul_u128(den_ / g2, rhs.num_ / g1);
    return Rational(num, den);
}

// Overflow-free comparison via the continued-fraction expansion of both
// sides: compare integer parts, then recurse on the flipped remainders.
std::strong_ordering Rational::operator<=>(const Rational& rhs) const
{
    u128 a = num_, b = den_, c = rhs.num_, d = rhs.den_;
    bool flipped = false;
    for (;;) {
        u128 qa = a / b, qc = c / d;
        if (qa != qc) {
            auto ord = qa <=> qc;
            if (!flipped)
                return ord;
            return ord == std::strong_ordering::less
                       ? std::strong_ordering::greater
                       : std::strong_ordering::less;
        }
        a -= qa * b;
        c -= qc * d;
        if (a == 0 && c == 0)
            return std::strong_ordering::equal;
        if (a == 0)
            return flipped ? std::strong_ordering::greater
                           : std::strong_ordering::less;
        if (c == 0)
            return flipped ? std::strong_ordering::less
                           : std::strong_ordering::greater;
        // a/b vs c/d with both proper fractions: equivalent to comparing
        // the reciprocals in reverse order.
        std::swap(a, b);
        std::swap(c, d);
        flipped = !flipped;
    }
}

namespace {

// scaled = value * 10^decimals, rounded half-even.
u128 round_scaled_half_even(u128 num, u128 den, int decimals)
{
    u128 scale = 1;
    for (int i = 0; i < decimals; ++i)
        scale = checked_mul_u128(scale, 10);
    u128 scaled_num = checked_mul_u128(num, scale);
    u128 q = scaled_num / den;
    u128 r = scaled_num % den;
    u128 twice = checked_mul_u128(r, 2);
    if (twice > den || (twice == den && (q & 1) != 0))
        q = checked_add_u128(q, 1);
    return q;
}

std::string format_scaled(u128 scaled, int decimals)
{
    std::string digits = u128_to_string(scaled);
    if (decimals == 0)
        return digits;
    if (digits.size() <= static_cast<size_t>(decimals))
        digits.insert(digits.begin(),
                      static_cast<size_t>(decimals) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<size_t>(decimals), ".");
    return digits;
}

} // namespace

std::string Rational::to_percent_string(int decimals) const
{
    u128 pct_num = checked_mul_u128(num_, 100);
    return format_scaled(round_scaled_half_even(pct_num, den_, decimals),
                         decimals);
}

std::string Rational::to_decimal_string(int decimals) const
{
    return format_scaled(round_scaled_half_even(num_, den_, decimals),
                         decimals);
}

std::string Rational::to_fraction_string() const
{
    return u128_to_string(num_) + "/" + u128_to_string(den_);
}

} // namespace stakesim
