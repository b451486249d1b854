#pragma once

#include "stakesim/amount.hpp"
#include "stakesim/rational.hpp"

namespace stakesim {

/// Network-level census and rate parameters shared by the closed-form
/// emission/inflation formulas and the simulator defaults.
struct NetworkParams {
    u64 n_validators = 0;
    u64 n_standby = 0;
    TokenAmount stake_per_node;
    Rational validator_rate;
    Rational standby_rate;
    TokenAmount total_supply;

    /// XDC mainnet census: 108 validators + 108 standby nodes at
    /// 10,000,000 XDC each, 10%/8% annual rates, 37,936,724,971 XDC
    /// total supply (August 2024).
    static NetworkParams xdc_mainnet();

    void validate() const; // throws std::invalid_argument
};

/// Total tokens minted per year to fund validator and standby incomes:
/// n_validators*stake*validator_rate + n_standby*stake*standby_rate.
TokenAmount annual_emission(const NetworkParams& params);

/// Exact emission/supply ratio. Render with
/// Rational::to_percent_string(3) to get the headline figure.
Rational inflation_rate(TokenAmount emission, TokenAmount supply);

/// Network-wide daily fee revenue: gas_price * avg_gas_used * daily_tx_count.
TokenAmount daily_transaction_fee(TokenAmount gas_price, u64 avg_gas_used,
                                  u64 daily_tx_count);

/// Relative increase of one validator's annual income when daily
/// network-wide fee revenue scales by `multiplier`. Baseline income is
/// the validator's fee share plus its staking income; the result is the
/// exact rational delta/baseline.
Rational fee_scaling_income_delta(u64 multiplier,
                                  TokenAmount baseline_daily_network_fee,
                                  const NetworkParams& params);

} // namespace stakesim
