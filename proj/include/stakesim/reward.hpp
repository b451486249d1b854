#pragma once

#include "stakesim/amount.hpp"
#include "stakesim/rational.hpp"

#include <string>

namespace stakesim {

enum class SchemeKind { CurrentModel, Scheme1, Scheme2, EthStyle };

enum class FeeDisposition { Distribute, Burn };

/// A reward scheme bundles the annual staking rates for each role with
/// the disposition of the base transaction fee. CurrentModel pays
/// 10%/8% and hands fees to producers; Scheme1 pays a flat 9% to both
/// roles with fees to producers; Scheme2 pays 10%/8% plus tips while
/// burning the base fee; EthStyle applies a single issuance rate to all
/// stake and burns the base fee.
struct RewardScheme {
    SchemeKind kind = SchemeKind::CurrentModel;
    Rational validator_rate = percent(10);
    Rational standby_rate = percent(8);
    Rational issuance_rate = percent(0); // EthStyle only
    FeeDisposition fee_disposition = FeeDisposition::Distribute;

    static RewardScheme current_model();
    static RewardScheme scheme1();
    static RewardScheme scheme2();
    static RewardScheme eth_style(Rational issuance);

    /// Annual staking rate for a role under this scheme.
    Rational role_rate(bool is_validator) const;

    std::string name() const;
};

struct EarningsBreakdown {
    TokenAmount staking_reward;
    TokenAmount fee_share;
    TokenAmount tips;
    TokenAmount penalties;   // the portion actually absorbed by income
    TokenAmount stake_slash; // penalty overflow charged to stake
    TokenAmount total;       // staking + fees + tips - penalties
};

/// Period earnings of a validator node. fee_share only counts under
/// fee-distributing schemes; tips always go to the producer. Penalties
/// in excess of period income slash stake instead of going negative.
EarningsBreakdown validator_earnings(const RewardScheme& scheme,
                                     TokenAmount stake, TokenAmount fee_share,
                                     TokenAmount tips, TokenAmount penalties,
                                     const Rational& period_fraction);

/// Period earnings of a standby node: staking income only.
EarningsBreakdown standby_earnings(const RewardScheme& scheme,
                                   TokenAmount stake,
                                   const Rational& period_fraction);

struct TotalRewards {
    TokenAmount rewards;
    TokenAmount stake_slash;
};

/// issuance + tips - penalties, saturating at zero with the shortfall
/// reported as a stake slash.
TotalRewards eth_total_rewards(TokenAmount issuance, TokenAmount tips,
                               TokenAmount penalties);

/// total_staked * issuance_rate - total_burned; negative means the
/// network deflated over the period.
SignedAmount net_supply_growth(TokenAmount total_staked,
                               const Rational& issuance_rate,
                               TokenAmount total_burned);

} // namespace stakesim
