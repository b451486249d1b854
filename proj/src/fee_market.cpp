#include "stakesim/fee_market.hpp"

#include <algorithm>
#include <stdexcept>

namespace stakesim {

FeeTierTable FeeTierTable::standard()
{
    FeeTierTable t;
    t.tiers = {
        {Rational(1, 1), 1},  {Rational(5, 1), 10}, {Rational(12, 1), 20},
        {Rational(25, 1), 50}, {Rational(50, 1), 100},
    };
    t.tip_activation_ratio = Rational(100, 1);
    return t;
}

void FeeTierTable::validate() const
{
    for (size_t i = 1; i < tiers.size(); ++i) {
        if (!(tiers[i - 1].tps_ratio_lower_bound <
              tiers[i].tps_ratio_lower_bound))
            throw std::invalid_argument("fee tier bounds must be increasing");
        if (tiers[i].multiplier < tiers[i - 1].multiplier)
            throw std::invalid_argument(
                "fee tier multipliers must be non-decreasing");
    }
}

void FeeMarketState::validate() const
{
    if (base_fee.is_zero())
        throw std::invalid_argument("base fee must be positive");
    if (gas_target == 0)
        throw std::invalid_argument("gas target must be positive");
    if (gas_limit != 2 * gas_target)
        throw std::invalid_argument("gas limit must be twice the gas target");
    tier_table.validate();
    if (tip_config.min_tip.is_zero() ||
        tip_config.max_tip < tip_config.min_tip)
        throw std::invalid_argument("tip bounds must satisfy 0 < min <= max");
}

TokenAmount next_base_fee(const FeeMarketState& state, u64 gas_used_in_block)
{
    if (gas_used_in_block > state.gas_limit)
        throw std::invalid_argument("block gas exceeds gas limit");
    const u128 base = state.base_fee.atoms();
    const u64 target = state.gas_target;
    if (gas_used_in_block == target)
        return state.base_fee;
    if (gas_used_in_block > target) {
        u128 delta = detail::mul_div_floor(base, gas_used_in_block - target,
                                           static_cast<u128>(target) * 8);
        return TokenAmount::from_atoms(detail::checked_add_u128(base, delta));
    }
    u128 delta = detail::mul_div_floor(base, target - gas_used_in_block,
                                       static_cast<u128>(target) * 8);
    u128 next = base > delta ? base - delta : 0;
    return TokenAmount::from_atoms(next < 1 ? 1 : next);
}

u64 fee_multiplier(const Rational& tps_ratio, const FeeTierTable& table)
{
    u64 mult = 1;
    for (const auto& tier : table.tiers) {
        if (tier.tps_ratio_lower_bound <= tps_ratio)
            mult = tier.multiplier;
        else
            break;
    }
    return mult;
}

bool tip_active(const Rational& tps_ratio, const FeeTierTable& table)
{
    return table.tip_activation_ratio <= tps_ratio;
}

std::vector<Transaction> order_by_tip(std::vector<Transaction> pending)
{
    std::stable_sort(pending.begin(), pending.end(),
                     [](const Transaction& a, const Transaction& b) {
                         return b.tip < a.tip;
                     });
    return pending;
}

FeeSplit split_fee(const Transaction& tx, TokenAmount base_fee, u64 multiplier)
{
    if (tx.gas_used == 0)
        throw std::invalid_argument("transaction with zero gas");
    FeeSplit split;
    split.burned = base_fee.mul(multiplier).mul(tx.gas_used);
    split.to_validator = tx.tip;
    return split;
}

} // namespace stakesim
