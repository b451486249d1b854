#pragma once

#include "stakesim/amount.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace stakesim {

/// Exact non-negative rational, kept in lowest terms. Used for every
/// protocol rate (10%, 8%, 12.5%, ...) so conservation checks never see
/// binary floating-point drift.
class Rational {
public:
    constexpr Rational() = default;
    Rational(u128 num, u128 den);
    static Rational from_int(u128 v) { return Rational(v, 1); }

    /// Accepts "10%", "0.125", "1/8" and plain integers, all parsed
    /// exactly.
    static Rational parse(std::string_view text);

    u128 num() const { return num_; }
    u128 den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const; // throws if negative
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;

    std::strong_ordering operator<=>(const Rational& rhs) const;
    bool operator==(const Rational& rhs) const
    {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }

    /// floor(amount * this), exact.
    TokenAmount scale_floor(TokenAmount a) const
    {
        return a.mul_div(num_, den_);
    }

    /// Rendered as a percentage with `decimals` fractional digits,
    /// rounded half-even: 194400000/37936724971 -> "0.512" at 3.
    std::string to_percent_string(int decimals) const;

    /// Rendered as a plain decimal with `decimals` digits, half-even.
    std::string to_decimal_string(int decimals) const;

    /// "num/den" (canonical exact form).
    std::string to_fraction_string() const;

    double to_double() const
    {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

private:
    u128 num_ = 0;
    u128 den_ = 1;
};

inline Rational percent(u128 pct) { return Rational(pct, 100); }

} // namespace stakesim
