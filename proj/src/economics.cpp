#include "stakesim/economics.hpp"

namespace stakesim {

NetworkParams NetworkParams::xdc_mainnet()
{
    NetworkParams p;
    p.n_validators = 108;
    p.n_standby = 108;
    p.stake_per_node = TokenAmount::from_tokens(10'000'000);
    p.validator_rate = percent(10);
    p.standby_rate = percent(8);
    p.total_supply = TokenAmount::from_tokens(37'936'724'971ULL);
    return p;
}

void NetworkParams::validate() const
{
    if (n_validators == 0)
        throw std::invalid_argument("n_validators must be > 0");
    if (n_standby == 0)
        throw std::invalid_argument("n_standby must be > 0");
    if (stake_per_node.is_zero())
        throw std::invalid_argument("stake_per_node must be > 0");
}

TokenAmount annual_emission(const NetworkParams& params)
{
    params.validate();
    TokenAmount validator_pool = params.stake_per_node.mul(params.n_validators);
    TokenAmount standby_pool = params.stake_per_node.mul(params.n_standby);
    return params.validator_rate.scale_floor(validator_pool) +
           params.standby_rate.scale_floor(standby_pool);
}

Rational inflation_rate(TokenAmount emission, TokenAmount supply)
{
    if (supply.is_zero())
        throw std::domain_error("inflation over zero supply");
    return Rational(emission.atoms(), supply.atoms());
}

TokenAmount daily_transaction_fee(TokenAmount gas_price, u64 avg_gas_used,
                                  u64 daily_tx_count)
{
    return gas_price.mul(avg_gas_used).mul(daily_tx_count);
}

Rational fee_scaling_income_delta(u64 multiplier,
                                  TokenAmount baseline_daily_network_fee,
                                  const NetworkParams& params)
{
    if (multiplier < 1)
        throw std::invalid_argument("fee multiplier must be >= 1");
    if (params.n_validators == 0)
        throw std::domain_error("no validators");

    // Annual per-validator income, everything kept rational:
    //   baseline = stake*rate + F*365/n
    //   delta    = (multiplier-1)*F*365/n
    // delta/baseline = (m-1)*F*365*den / (n*stake*num + F*365*den)
    // with rate = num/den.
    const u128 fee = baseline_daily_network_fee.atoms();
    const u128 num = params.validator_rate.num();
    const u128 den = params.validator_rate.den();
    using detail::checked_mul_u128;
    using detail::checked_add_u128;

    u128 fee_year_den = checked_mul_u128(checked_mul_u128(fee, 365), den);
    u128 delta_num = checked_mul_u128(fee_year_den, multiplier - 1);
    u128 stake_term = checked_mul_u128(
        checked_mul_u128(params.stake_per_node.atoms(), params.n_validators),
        num);
    u128 base_num = checked_add_u128(stake_term, fee_year_den);
    if (base_num == 0)
        return Rational(0, 1);
    return Rational(delta_num, base_num);
}

} // namespace stakesim
