#pragma once

#include "stakesim/amount.hpp"
#include "stakesim/rational.hpp"

#include <cstdint>
#include <vector>

namespace stakesim {

/// One escalation tier: blocks whose TPS ratio is at or above the bound
/// (and below the next bound) charge base_fee * multiplier per gas.
struct FeeTier {
    Rational tps_ratio_lower_bound;
    u64 multiplier = 1;
};

/// Tiered fee escalation keyed on the ratio of current TPS to a
/// configured reference TPS. Bounds are lower-inclusive half-open
/// intervals; ratios at or above tip_activation_ratio keep the top
/// multiplier and additionally activate the tip mechanism.
struct FeeTierTable {
    std::vector<FeeTier> tiers;
    Rational tip_activation_ratio = Rational(100, 1);

    /// 1-5 -> 1x, 5-12 -> 10x, 12-25 -> 20x, 25-50 -> 50x,
    /// 50-100 -> 100x, 100+ -> tip mechanism.
    static FeeTierTable standard();

    void validate() const;
};

struct TipConfig {
    TokenAmount min_tip = TokenAmount::parse("0.001");
    TokenAmount max_tip = TokenAmount::parse("0.01");
};

struct Transaction {
    u64 id = 0;
    u64 gas_used = 0;
    TokenAmount tip;
    u64 submitted_at = 0;
};

struct FeeMarketState {
    TokenAmount base_fee; // per gas, in atoms; always >= 1 atom
    u64 gas_target = 0;
    u64 gas_limit = 0; // 2 * gas_target
    FeeTierTable tier_table;
    TipConfig tip_config;

    void validate() const;
};

/// Next block's base fee from this block's gas usage: the fee moves by
/// base * (used - target) / target / 8, reaching exactly +-12.5% at the
/// elasticity extremes, and never drops below 1 atom. A block exactly
/// at target leaves the fee unchanged.
TokenAmount next_base_fee(const FeeMarketState& state, u64 gas_used_in_block);

/// Multiplier of the highest tier whose lower bound <= tps_ratio;
/// ratios below the first tier escalate nothing (1x).
u64 fee_multiplier(const Rational& tps_ratio, const FeeTierTable& table);

bool tip_active(const Rational& tps_ratio, const FeeTierTable& table);

/// Stable descending sort by tip; equal tips keep submission order.
std::vector<Transaction> order_by_tip(std::vector<Transaction> pending);

struct FeeSplit {
    TokenAmount burned;       // base component: base_fee * multiplier * gas
    TokenAmount to_validator; // the tip
    TokenAmount total() const { return burned + to_validator; }
};

/// Splits the sender's charge into the base component (burned, or
/// redirected to the producer by fee-distributing schemes) and the tip.
FeeSplit split_fee(const Transaction& tx, TokenAmount base_fee,
                   u64 multiplier);

} // namespace stakesim
