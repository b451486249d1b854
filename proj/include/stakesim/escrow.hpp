#pragma once

#include "stakesim/amount.hpp"
#include "stakesim/rational.hpp"

#include <deque>
#include <vector>

namespace stakesim {

enum class FeeDecayMode { Linear, StepAtThreshold };

struct WithdrawalTier {
    TokenAmount amount_lower_bound;
    Rational fee_rate;
};

/// Withdrawal fee schedule: a step function on the withdrawn amount
/// (lower-inclusive tiers) scaled down with the age of the withdrawn
/// deposits. Linear mode decays the tier rate to zero at zero_fee_age;
/// step mode keeps the full rate until zero_fee_age and is free after.
struct WithdrawalFeeTable {
    std::vector<WithdrawalTier> tiers;
    u64 zero_fee_age = 1;     // in age units (the caller picks the unit)
    FeeDecayMode decay = FeeDecayMode::Linear;
    TokenAmount threshold;    // minimum withdrawable amount

    /// 1,000 XDC -> 50%, 10,000 -> 30%, 100,000 -> 20%,
    /// 1,000,000 -> 0% (free after zero_fee_age in any tier).
    static WithdrawalFeeTable standard(u64 zero_fee_age_units);

    void validate() const;
};

/// Effective fee rate for withdrawing `amount` whose deposits have the
/// given age (same unit as zero_fee_age; fractional ages are exact).
Rational withdrawal_fee(TokenAmount amount, const Rational& age,
                        const WithdrawalFeeTable& table);

/// Reward escrow for one node. Rewards accrue with a timestamped
/// deposit log; withdrawals consume deposits oldest-first, and the fee
/// on the withdrawn amount is burned by the caller.
class EscrowAccount {
public:
    struct Deposit {
        u64 height;
        TokenAmount amount;
    };
    struct WithdrawResult {
        TokenAmount payout;
        TokenAmount burned;
    };

    void accrue(TokenAmount amount, u64 now);

    /// Withdraws `amount` (>= table.threshold) at block `now`.
    /// `age_unit_blocks` converts block-height age into the table's age
    /// unit. The deposit age is the exact weighted average height of
    /// the FIFO-consumed deposits.
    WithdrawResult withdraw(TokenAmount amount, u64 now,
                            const WithdrawalFeeTable& table,
                            u64 age_unit_blocks);

    TokenAmount balance() const { return balance_; }
    const std::deque<Deposit>& deposits() const { return deposits_; }

private:
    TokenAmount balance_;
    std::deque<Deposit> deposits_;
};

} // namespace stakesim
