#include "stakesim/escrow.hpp"

#include <stdexcept>

namespace stakesim {

WithdrawalFeeTable WithdrawalFeeTable::standard(u64 zero_fee_age_units)
{
    WithdrawalFeeTable t;
    t.tiers = {
        {TokenAmount::from_tokens(1'000), percent(50)},
        {TokenAmount::from_tokens(10'000), percent(30)},
        {TokenAmount::from_tokens(100'000), percent(20)},
        {TokenAmount::from_tokens(1'000'000), percent(0)},
    };
    t.zero_fee_age = zero_fee_age_units;
    t.threshold = TokenAmount::from_tokens(1'000);
    return t;
}

void WithdrawalFeeTable::validate() const
{
    if (tiers.empty())
        throw std::invalid_argument("withdrawal fee table has no tiers");
    if (zero_fee_age == 0)
        throw std::invalid_argument("zero_fee_age must be positive");
    for (size_t i = 1; i < tiers.size(); ++i) {
        if (!(tiers[i - 1].amount_lower_bound < tiers[i].amount_lower_bound))
            throw std::invalid_argument(
                "withdrawal tier bounds must be increasing");
        if (tiers[i - 1].fee_rate < tiers[i].fee_rate)
            throw std::invalid_argument(
                "withdrawal fee rates must be non-increasing");
    }
}

Rational withdrawal_fee(TokenAmount amount, const Rational& age,
                        const WithdrawalFeeTable& table)
{
    table.validate();
    if (amount < table.tiers.front().amount_lower_bound)
        throw std::invalid_argument("amount below minimum withdrawable");

    Rational base = table.tiers.front().fee_rate;
    for (const auto& tier : table.tiers)
        if (tier.amount_lower_bound <= amount)
            base = tier.fee_rate;

    Rational horizon(table.zero_fee_age, 1);
    if (!(age < horizon))
        return Rational(0, 1);
    if (table.decay == FeeDecayMode::StepAtThreshold)
        return base;
    return base * ((horizon - age) / horizon);
}

void EscrowAccount::accrue(TokenAmount amount, u64 now)
{
    if (amount.is_zero())
        throw std::invalid_argument("escrow accrual of zero");
    balance_ += amount;
    deposits_.push_back({now, amount});
}

EscrowAccount::WithdrawResult
EscrowAccount::withdraw(TokenAmount amount, u64 now,
                        const WithdrawalFeeTable& table, u64 age_unit_blocks)
{
    if (amount.is_zero() || amount < table.threshold)
        throw std::invalid_argument("withdrawal below threshold");
    if (balance_ < amount)
        throw std::invalid_argument("insufficient escrow balance");
    if (age_unit_blocks == 0)
        throw std::invalid_argument("age unit must be positive");

    // FIFO-consume the deposit log and form the exact stake-weighted
    // average deposit height of the withdrawn amount.
    u128 remaining = amount.atoms();
    u128 weighted_height = 0;
    while (remaining > 0) {
        Deposit& d = deposits_.front();
        u128 take = d.amount.atoms() < remaining ? d.amount.atoms() : remaining;
        weighted_height += detail::checked_mul_u128(take, d.height);
        remaining -= take;
        d.amount -= TokenAmount::from_atoms(take);
        if (d.amount.is_zero())
            deposits_.pop_front();
    }

    // age = now - weighted_height/amount, expressed in table age units:
    // (now*amount - weighted_height) / (amount * age_unit_blocks).
    u128 now_scaled = detail::checked_mul_u128(now, amount.atoms());
    if (weighted_height > now_scaled)
        throw std::logic_error("deposit from the future");
    Rational age(now_scaled - weighted_height,
                 detail::checked_mul_u128(amount.atoms(), age_unit_blocks));

    Rational rate = withdrawal_fee(amount, age, table);
    TokenAmount fee = rate.scale_floor(amount);
    balance_ -= amount;
    return {amount - fee, fee};
}

} // namespace stakesim
