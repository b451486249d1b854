#include "stakesim/reward.hpp"

#include <stdexcept>

namespace stakesim {

RewardScheme RewardScheme::current_model()
{
    return RewardScheme{SchemeKind::CurrentModel, percent(10), percent(8),
                        percent(0), FeeDisposition::Distribute};
}

RewardScheme RewardScheme::scheme1()
{
    return RewardScheme{SchemeKind::Scheme1, percent(9), percent(9),
                        percent(0), FeeDisposition::Distribute};
}

RewardScheme RewardScheme::scheme2()
{
    return RewardScheme{SchemeKind::Scheme2, percent(10), percent(8),
                        percent(0), FeeDisposition::Burn};
}

RewardScheme RewardScheme::eth_style(Rational issuance)
{
    return RewardScheme{SchemeKind::EthStyle, issuance, issuance, issuance,
                        FeeDisposition::Burn};
}

Rational RewardScheme::role_rate(bool is_validator) const
{
    if (kind == SchemeKind::EthStyle)
        return issuance_rate;
    return is_validator ? validator_rate : standby_rate;
}

std::string RewardScheme::name() const
{
    switch (kind) {
    case SchemeKind::CurrentModel: return "current";
    case SchemeKind::Scheme1: return "scheme1";
    case SchemeKind::Scheme2: return "scheme2";
    case SchemeKind::EthStyle: return "eth_style";
    }
    throw std::logic_error("unknown reward scheme");
}

namespace {

void check_period(const Rational& period_fraction)
{
    if (period_fraction.is_zero() || Rational(1, 1) < period_fraction)
        throw std::invalid_argument("period fraction must be in (0, 1]");
}

EarningsBreakdown settle(TokenAmount staking, TokenAmount fee_share,
                         TokenAmount tips, TokenAmount penalties)
{
    EarningsBreakdown e;
    e.staking_reward = staking;
    e.fee_share = fee_share;
    e.tips = tips;
    TokenAmount income = staking + fee_share + tips;
    if (penalties > income) {
        e.penalties = income;
        e.stake_slash = penalties - income;
        e.total = TokenAmount{};
    } else {
        e.penalties = penalties;
        e.total = income - penalties;
    }
    return e;
}

} // namespace

EarningsBreakdown validator_earnings(const RewardScheme& scheme,
                                     TokenAmount stake, TokenAmount fee_share,
                                     TokenAmount tips, TokenAmount penalties,
                                     const Rational& period_fraction)
{
    check_period(period_fraction);
    Rational rate = scheme.role_rate(true) * period_fraction;
    TokenAmount staking = rate.scale_floor(stake);
    TokenAmount fees = scheme.fee_disposition == FeeDisposition::Distribute
                           ? fee_share
                           : TokenAmount{};
    return settle(staking, fees, tips, penalties);
}

EarningsBreakdown standby_earnings(const RewardScheme& scheme,
                                   TokenAmount stake,
                                   const Rational& period_fraction)
{
    check_period(period_fraction);
    Rational rate = scheme.role_rate(false) * period_fraction;
    return settle(rate.scale_floor(stake), TokenAmount{}, TokenAmount{},
                  TokenAmount{});
}

TotalRewards eth_total_rewards(TokenAmount issuance, TokenAmount tips,
                               TokenAmount penalties)
{
    TokenAmount income = issuance + tips;
    if (penalties > income)
        return {TokenAmount{}, penalties - income};
    return {income - penalties, TokenAmount{}};
}

SignedAmount net_supply_growth(TokenAmount total_staked,
                               const Rational& issuance_rate,
                               TokenAmount total_burned)
{
    TokenAmount issued = issuance_rate.scale_floor(total_staked);
    return SignedAmount::difference(issued, total_burned);
}

} // namespace stakesim
