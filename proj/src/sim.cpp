#include "stakesim/sim.hpp"

#include <algorithm>
#include <stdexcept>

namespace stakesim {

namespace {

constexpr u64 kTrafficStream = 1;
constexpr u64 kTipStream = 2;
constexpr u64 kAvailabilityStream = 3;
constexpr u64 kSelectionStream = 4;

LedgerState build_ledger(const ScenarioConfig& cfg)
{
    LedgerState ledger(cfg.network.stake_per_node, cfg.network.n_validators);
    for (const auto& g : cfg.census)
        for (u64 i = 0; i < g.count; ++i)
            ledger.register_node(g.stake, g.role, g.lock_years, 0,
                                 g.availability);
    return ledger;
}

FeeMarketState build_fee_state(const ScenarioConfig& cfg)
{
    FeeMarketState s;
    s.base_fee = cfg.initial_base_fee;
    s.gas_target = cfg.gas_target;
    s.gas_limit = 2 * cfg.gas_target;
    s.tier_table = cfg.tier_table;
    s.tip_config = cfg.tip_config;
    s.validate();
    return s;
}

} // namespace

SimState::SimState(const ScenarioConfig& cfg)
    : ledger(build_ledger(cfg)),
      fee_state(build_fee_state(cfg)),
      cfg_(&cfg),
      traffic_rng_(cfg.seed, kTrafficStream),
      tip_rng_(cfg.seed, kTipStream),
      avail_rng_(cfg.seed, kAvailabilityStream),
      select_rng_(cfg.seed, kSelectionStream)
{
    initial_supply = cfg.network.total_supply;
    total_supply = initial_supply;

    size_t n = ledger.size();
    escrow.resize(n);
    liquid.resize(n);
    withdrawn.resize(n);
    earnings.resize(n);
    epoch_income_.resize(n);
    node_annual_.resize(n);
    node_minted_.resize(n, 0);

    // Staking accrual entitlements. Under the loyalty emission mode the
    // role-based rates are replaced by the epoch loyalty pool, so the
    // per-node annual amounts are zero.
    for (const auto& node : ledger.nodes()) {
        u128 annual = 0;
        if (!cfg.loyalty.enabled) {
            Rational rate = cfg.scheme.role_rate(node.role == Role::Validator);
            annual = rate.scale_floor(node.stake).atoms();
        }
        node_annual_[node.id - 1] = annual;
    }
    // Nodes with equal annual rewards floor identically, so per-block
    // accrual only needs one entitlement evaluation per distinct value.
    std::vector<u128> sorted = node_annual_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size();) {
        size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        if (sorted[i] != 0)
            groups_.push_back({sorted[i], static_cast<u64>(j - i), 0});
        i = j;
    }
}

void SimState::audit() const
{
    TokenAmount expected = initial_supply + cum_minted - burned_total();
    if (expected != total_supply)
        throw std::logic_error("supply audit failed: supply " +
                               total_supply.to_string() + " != " +
                               expected.to_string());
}

u64 traffic_count(const TrafficProfile& profile, Rng& traffic_rng,
                  u64 span_seconds, const Rational& day, Rational& carry)
{
    if (profile.mean_tps.is_zero())
        return 0;
    Rational lambda = profile.mean_tps * Rational(span_seconds, 1) *
                      profile.multiplier_at_day(day);
    if (profile.poisson)
        return traffic_rng.poisson(lambda.to_double());
    // Deterministic mode: emit floor of the running expected count so
    // long-run totals match the mean exactly.
    carry = carry + lambda;
    u128 whole = carry.num() / carry.den();
    carry = carry - Rational(whole, 1);
    if (whole > static_cast<u128>(~static_cast<u64>(0)))
        throw std::overflow_error("traffic count exceeds 64 bits");
    return static_cast<u64>(whole);
}

BlockTraffic generate_traffic(const TrafficProfile& profile,
                              const FeeTierTable& tiers, Rng& traffic_rng,
                              Rng& tip_rng, u64 span_seconds,
                              const Rational& day, Rational& carry,
                              u64& next_tx_id, u64 height,
                              const TipConfig& tip_config)
{
    BlockTraffic out;
    u64 count = traffic_count(profile, traffic_rng, span_seconds, day, carry);
    out.tps_ratio = count == 0 ? Rational(0, 1)
                               : Rational(count, span_seconds) /
                                     profile.reference_tps;
    out.tips_active = tip_active(out.tps_ratio, tiers);

    out.txs.reserve(count);
    const u128 tip_lo = tip_config.min_tip.atoms();
    const u128 tip_hi = tip_config.max_tip.atoms();
    for (u64 k = 0; k < count; ++k) {
        Transaction tx;
        tx.id = ++next_tx_id;
        tx.gas_used = profile.avg_gas_per_tx;
        tx.submitted_at = height;
        if (out.tips_active)
            tx.tip = TokenAmount::from_atoms(
                tip_lo + tip_rng.uniform_below_u128(tip_hi - tip_lo + 1));
        out.txs.push_back(tx);
    }
    return out;
}

std::vector<bool> SimState::draw_availability()
{
    std::vector<bool> avail(ledger.size());
    for (const auto& node : ledger.nodes()) {
        const Rational& a = node.availability;
        avail[node.id - 1] =
            a == Rational(1, 1) ? true : avail_rng_.bernoulli(a.num(), a.den());
    }
    return avail;
}

void SimState::attribute_fee(NodeId producer, TokenAmount base_component)
{
    if (cfg_->share_policy == FeeSharePolicy::Pooled) {
        epoch_fee_pool_ += base_component;
        return;
    }
    earnings[producer - 1].fee_share += base_component;
    epoch_income_[producer - 1] += base_component;
}

Rational SimState::entry_fee_rate(TokenAmount amount) const
{
    if (!cfg_->treasury.entry_fee_from_escrow)
        return cfg_->treasury.entry_fee_rate;
    const WithdrawalFeeTable& table = cfg_->escrow.table;
    if (amount < table.tiers.front().amount_lower_bound)
        return table.tiers.front().fee_rate;
    return withdrawal_fee(amount, Rational(0, 1), table);
}

void SimState::accrue_staking_block()
{
    const u64 year = cfg_->blocks_per_year();
    u128 delta = 0;
    for (auto& g : groups_) {
        u128 per_node = detail::mul_div_floor(g.annual_atoms, height + 1, year);
        u128 total = detail::checked_mul_u128(per_node, g.count);
        delta += total - g.entitled_prev;
        g.entitled_prev = total;
    }
    if (delta != 0) {
        TokenAmount minted = TokenAmount::from_atoms(delta);
        total_supply += minted;
        cum_minted += minted;
        epoch_minted_ += minted;
    }
}

void SimState::sync_node_staking()
{
    const u64 year = cfg_->blocks_per_year();
    for (size_t i = 0; i < node_annual_.size(); ++i) {
        if (node_annual_[i] == 0)
            continue;
        u128 entitled = detail::mul_div_floor(node_annual_[i], height, year);
        u128 delta = entitled - node_minted_[i];
        if (delta != 0) {
            TokenAmount d = TokenAmount::from_atoms(delta);
            earnings[i].staking_reward += d;
            epoch_income_[i] += d;
            node_minted_[i] = entitled;
        }
    }
}

void SimState::step_block()
{
    const ScenarioConfig& cfg = *cfg_;
    const u64 bpe = cfg.blocks_per_epoch();
    Rational day(height, bpe);

    BlockTraffic traffic = generate_traffic(
        cfg.traffic, fee_state.tier_table, traffic_rng_, tip_rng_,
        cfg.block_seconds, day, traffic_carry_, tx_counter_, height,
        fee_state.tip_config);
    const bool tips_on = traffic.tips_active;
    u64 mult = cfg.fixed_multiplier != 0
                   ? cfg.fixed_multiplier
                   : fee_multiplier(traffic.tps_ratio, fee_state.tier_table);
    if (tips_on && cfg.tip_mode == TipMode::Replace &&
        cfg.fixed_multiplier == 0)
        mult = 1;

    std::vector<bool> avail = draw_availability();
    ProducerPick pick = select_producer(ledger, height, cfg.producer_policy,
                                        select_rng_, avail);

    if (!pick.producer) {
        // Nothing can produce this slot; traffic is lost and the fee
        // market stays frozen.
        ++skipped_blocks;
        dropped_txs += traffic.txs.size();
    } else {
        if (pick.standby_promoted)
            ++standby_blocks;
        NodeId producer = *pick.producer;

        std::vector<Transaction> txs = std::move(traffic.txs);
        if (tips_on)
            txs = order_by_tip(std::move(txs));

        u64 gas_in_block = 0;
        for (const Transaction& tx : txs) {
            if (gas_in_block + tx.gas_used > fee_state.gas_limit) {
                ++dropped_txs;
                continue;
            }
            gas_in_block += tx.gas_used;
            ++total_txs;
            ++epoch_txs_;
            FeeSplit split = split_fee(tx, fee_state.base_fee, mult);
            cum_fees_charged += split.total();
            if (!split.to_validator.is_zero()) {
                cum_tips += split.to_validator;
                earnings[producer - 1].tips += split.to_validator;
                epoch_income_[producer - 1] += split.to_validator;
            }
            if (cfg.scheme.fee_disposition == FeeDisposition::Burn) {
                cum_fee_burned += split.burned;
                total_supply -= split.burned;
                epoch_burned_ += split.burned;
            } else {
                attribute_fee(producer, split.burned);
            }
        }
        fee_state.base_fee = next_base_fee(fee_state, gas_in_block);
    }

    accrue_staking_block();
    ++height;
    if (height % bpe == 0)
        run_epoch_boundary();
}

void SimState::step_epoch()
{
    const ScenarioConfig& cfg = *cfg_;
    const u64 bpe = cfg.blocks_per_epoch();
    Rational day(height, bpe);

    u64 count = traffic_count(cfg.traffic, traffic_rng_, 86'400, day,
                              traffic_carry_);
    Rational tps_ratio = count == 0 ? Rational(0, 1)
                                    : Rational(count, 86'400) /
                                          cfg.traffic.reference_tps;
    bool tips_on = tip_active(tps_ratio, fee_state.tier_table);
    u64 mult = cfg.fixed_multiplier != 0
                   ? cfg.fixed_multiplier
                   : fee_multiplier(tps_ratio, fee_state.tier_table);
    if (tips_on && cfg.tip_mode == TipMode::Replace &&
        cfg.fixed_multiplier == 0)
        mult = 1;

    // Cap the epoch's traffic at the chain's gas capacity.
    u128 epoch_capacity =
        static_cast<u128>(fee_state.gas_limit / cfg.traffic.avg_gas_per_tx) *
        bpe;
    u64 included = epoch_capacity < count ? static_cast<u64>(epoch_capacity)
                                          : count;
    dropped_txs += count - included;
    total_txs += included;
    epoch_txs_ += included;

    // Drive the base-fee path from the traffic profile's expected
    // per-block gas, so it matches the per-block loop exactly under
    // constant traffic while epoch-scale sampling noise does not
    // compound into a runaway fee. Once the fee reaches a fixed point
    // the remaining blocks contribute identically.
    Rational expected_gas = cfg.traffic.mean_tps *
                            Rational(cfg.block_seconds, 1) *
                            cfg.traffic.multiplier_at_day(day) *
                            Rational(cfg.traffic.avg_gas_per_tx, 1);
    u128 path_gas_wide = expected_gas.num() / expected_gas.den();
    u64 path_gas = path_gas_wide > fee_state.gas_limit
                       ? fee_state.gas_limit
                       : static_cast<u64>(path_gas_wide);
    u128 base_sum = 0;
    for (u64 k = 0; k < bpe; ++k) {
        TokenAmount next = next_base_fee(fee_state, path_gas);
        if (next == fee_state.base_fee) {
            base_sum = detail::checked_add_u128(
                base_sum, detail::checked_mul_u128(
                              fee_state.base_fee.atoms(), bpe - k));
            break;
        }
        base_sum = detail::checked_add_u128(base_sum,
                                            fee_state.base_fee.atoms());
        fee_state.base_fee = next;
    }

    // Revenue charges the sampled traffic at the path's fee levels:
    // sum_k base_k * mult * (included_gas / bpe), kept exact.
    u128 included_gas = detail::checked_mul_u128(
        included, cfg.traffic.avg_gas_per_tx);
    TokenAmount base_total = TokenAmount::from_atoms(detail::mul_div_floor(
        detail::checked_mul_u128(base_sum, mult), included_gas, bpe));
    TokenAmount tip_total;
    if (tips_on && included > 0) {
        TokenAmount tip_sum =
            fee_state.tip_config.min_tip + fee_state.tip_config.max_tip;
        tip_total = tip_sum.mul(included).mul_div(1, 2);
    }
    cum_fees_charged += base_total + tip_total;
    cum_tips += tip_total;

    // Mean-field attribution: expected production share per validator
    // (availability under round-robin, stake-weighted availability
    // under the lottery).
    TokenAmount tip_distributed, base_distributed;
    if (!base_total.is_zero() || !tip_total.is_zero()) {
        if (cfg.scheme.fee_disposition == FeeDisposition::Burn) {
            cum_fee_burned += base_total;
            total_supply -= base_total;
            epoch_burned_ += base_total;
            base_total = TokenAmount{};
        } else if (cfg.share_policy == FeeSharePolicy::Pooled) {
            epoch_fee_pool_ += base_total;
            base_distributed = base_total;
        }

        u128 lcm = 1;
        for (const auto& n : ledger.nodes()) {
            if (n.role != Role::Validator)
                continue;
            u128 d = n.availability.den();
            lcm = detail::checked_mul_u128(lcm / detail::gcd_u128(lcm, d), d);
        }
        std::vector<std::pair<NodeId, u128>> weights;
        u128 weight_sum = 0;
        for (const auto& n : ledger.nodes()) {
            if (n.role != Role::Validator)
                continue;
            u128 w = detail::checked_mul_u128(
                n.availability.num(), lcm / n.availability.den());
            if (cfg.producer_policy == ProducerPolicy::StakeLottery)
                w = detail::checked_mul_u128(w, n.stake.atoms());
            weights.emplace_back(n.id, w);
            weight_sum += w;
        }
        if (weight_sum > 0) {
            for (const auto& [id, w] : weights) {
                if (!base_total.is_zero() &&
                    cfg.share_policy == FeeSharePolicy::PerProducer) {
                    TokenAmount share = base_total.mul_div(w, weight_sum);
                    earnings[id - 1].fee_share += share;
                    epoch_income_[id - 1] += share;
                    base_distributed += share;
                }
                if (!tip_total.is_zero()) {
                    TokenAmount share = tip_total.mul_div(w, weight_sum);
                    earnings[id - 1].tips += share;
                    epoch_income_[id - 1] += share;
                    tip_distributed += share;
                }
            }
        }
        ledger.add_epoch_dust(base_total - base_distributed);
        ledger.add_epoch_dust(tip_total - tip_distributed);
    }

    // Staking accrual for the whole epoch: identical closed form to the
    // per-block loop, evaluated once.
    const u64 year = cfg.blocks_per_year();
    u128 delta = 0;
    for (auto& g : groups_) {
        u128 per_node =
            detail::mul_div_floor(g.annual_atoms, height + bpe, year);
        u128 total = detail::checked_mul_u128(per_node, g.count);
        delta += total - g.entitled_prev;
        g.entitled_prev = total;
    }
    if (delta != 0) {
        TokenAmount minted = TokenAmount::from_atoms(delta);
        total_supply += minted;
        cum_minted += minted;
        epoch_minted_ += minted;
    }

    height += bpe;
    run_epoch_boundary();
}

void SimState::run_epoch_boundary()
{
    const ScenarioConfig& cfg = *cfg_;
    const u64 bpe = cfg.blocks_per_epoch();
    const bool partial = height % bpe != 0;
    const u64 epoch = height / bpe + (partial ? 1 : 0);

    sync_node_staking();

    if (cfg.loyalty.enabled && !partial) {
        u128 entitled =
            detail::mul_div_floor(cfg.loyalty.pool.atoms(), epoch, 365);
        u128 delta = entitled - loyalty_entitled_prev_;
        loyalty_entitled_prev_ = entitled;
        if (delta != 0) {
            TokenAmount minted = TokenAmount::from_atoms(delta);
            total_supply += minted;
            cum_minted += minted;
            epoch_minted_ += minted;
        }
        TokenAmount pot =
            TokenAmount::from_atoms(delta) + ledger.take_epoch_dust();
        std::vector<Masternode> participants;
        for (const auto& n : ledger.nodes())
            if (n.role == Role::Validator || cfg.loyalty.include_standby)
                participants.push_back(n);
        if (!pot.is_zero() && !participants.empty()) {
            LoyaltyAllocation alloc = distribute_loyalty_pool(pot, participants);
            for (const auto& [id, amount] : alloc.allocations) {
                earnings[id - 1].staking_reward += amount;
                epoch_income_[id - 1] += amount;
            }
            ledger.add_epoch_dust(alloc.dust);
        } else {
            ledger.add_epoch_dust(pot);
        }
    }

    // Pooled fee policy: the epoch's base-fee income splits across the
    // validator set pro-rata by stake.
    if (!epoch_fee_pool_.is_zero()) {
        u128 validator_stake = 0;
        for (const auto& n : ledger.nodes())
            if (n.role == Role::Validator)
                validator_stake += n.stake.atoms();
        TokenAmount distributed;
        if (validator_stake > 0) {
            for (const auto& n : ledger.nodes()) {
                if (n.role != Role::Validator)
                    continue;
                TokenAmount share =
                    epoch_fee_pool_.mul_div(n.stake.atoms(), validator_stake);
                earnings[n.id - 1].fee_share += share;
                epoch_income_[n.id - 1] += share;
                distributed += share;
            }
        }
        ledger.add_epoch_dust(epoch_fee_pool_ - distributed);
        epoch_fee_pool_ = TokenAmount{};
    }

    // Route the epoch's income: escrowed, or immediately liquid.
    for (size_t i = 0; i < epoch_income_.size(); ++i) {
        if (epoch_income_[i].is_zero())
            continue;
        if (cfg.escrow.enabled)
            escrow[i].accrue(epoch_income_[i], height);
        else
            liquid[i] += epoch_income_[i];
        epoch_income_[i] = TokenAmount{};
    }

    if (cfg.escrow.enabled && cfg.escrow.withdraw_every_days > 0 && !partial &&
        epoch % cfg.escrow.withdraw_every_days == 0) {
        for (size_t i = 0; i < escrow.size(); ++i) {
            TokenAmount balance = escrow[i].balance();
            if (balance < cfg.escrow.table.threshold || balance.is_zero())
                continue;
            auto res = escrow[i].withdraw(balance, height, cfg.escrow.table,
                                          bpe);
            liquid[i] += res.payout;
            withdrawn[i] += res.payout;
            if (!res.burned.is_zero()) {
                cum_withdraw_burned += res.burned;
                total_supply -= res.burned;
                epoch_burned_ += res.burned;
            }
        }
    }

    if (cfg.treasury.enabled && !partial) {
        if (!cfg.treasury.invest_fraction.is_zero()) {
            for (size_t i = 0; i < liquid.size(); ++i) {
                TokenAmount amount =
                    cfg.treasury.invest_fraction.scale_floor(liquid[i]);
                if (amount.is_zero())
                    continue;
                treasury.invest(static_cast<NodeId>(i + 1), amount,
                                entry_fee_rate(amount));
                liquid[i] -= amount;
            }
        }
        bool has_score = false;
        for (const auto& p : cfg.treasury.projects)
            if (!p.performance_score.is_zero())
                has_score = true;
        TokenAmount budget = std::min(cfg.treasury.epoch_budget,
                                      treasury.fund());
        if (!budget.is_zero() && has_score)
            treasury.distribute_to_projects(cfg.treasury.projects, budget);
        for (const auto& p : cfg.treasury.projects) {
            TokenAmount ret = p.fee_return_rate.scale_floor(
                treasury.outstanding_allocation(p.id));
            if (!ret.is_zero())
                treasury.collect_project_fees(p.id, ret);
        }
    }

    SeriesRow row;
    row.epoch = epoch;
    row.height = height;
    row.supply = total_supply;
    row.base_fee = fee_state.base_fee;
    u64 span_seconds = (height - epoch_start_height_) * cfg.block_seconds;
    row.tps = span_seconds == 0 ? Rational(0, 1)
                                : Rational(epoch_txs_, span_seconds);
    row.minted = epoch_minted_;
    row.burned = epoch_burned_;
    series.push_back(row);

    epoch_minted_ = TokenAmount{};
    epoch_burned_ = TokenAmount{};
    epoch_txs_ = 0;
    epoch_start_height_ = height;
    audit();
}

void SimState::finish()
{
    if (height % cfg_->blocks_per_epoch() != 0)
        run_epoch_boundary();
}

SummaryMetrics compute_metrics(const SimState& state)
{
    if (state.height == 0)
        throw std::domain_error("metrics over an empty history");
    SummaryMetrics m;
    m.net_minted =
        SignedAmount::difference(state.cum_minted, state.burned_total());
    m.deflationary = m.net_minted.negative;
    u128 year = state.config().blocks_per_year();
    m.realized_inflation = Rational(
        detail::checked_mul_u128(m.net_minted.magnitude.atoms(), year),
        detail::checked_mul_u128(state.initial_supply.atoms(), state.height));
    return m;
}

SimulationReport run_scenario(const ScenarioConfig& cfg,
                              const RunOptions& opts)
{
    if (cfg.duration_blocks == 0)
        throw std::invalid_argument("scenario duration is zero");

    SimState state(cfg);
    if (cfg.granularity == Granularity::PerBlock) {
        while (state.height < cfg.duration_blocks) {
            state.step_block();
            if (opts.audit_every_step)
                state.audit();
        }
    } else {
        while (state.height < cfg.duration_blocks) {
            state.step_epoch();
            if (opts.audit_every_step)
                state.audit();
        }
    }
    state.finish();
    state.audit();

    SimulationReport r;
    r.config_echo = cfg.to_flat();
    r.seed = cfg.seed;
    r.scheme = cfg.scheme.name();
    r.duration_blocks = cfg.duration_blocks;
    r.block_seconds = cfg.block_seconds;
    r.granularity =
        cfg.granularity == Granularity::PerBlock ? "per_block" : "per_epoch";
    r.initial_supply = state.initial_supply;
    r.final_supply = state.total_supply;
    r.total_minted = state.cum_minted;
    r.total_burned = state.burned_total();
    r.fee_burned = state.cum_fee_burned;
    r.withdrawal_burned = state.cum_withdraw_burned;
    r.total_fees_charged = state.cum_fees_charged;
    r.total_tips = state.cum_tips;
    r.undistributed_dust = state.ledger.epoch_dust();
    r.net_growth = SignedAmount::difference(r.total_minted, r.total_burned);
    SummaryMetrics metrics = compute_metrics(state);
    r.realized_inflation = metrics.realized_inflation;
    r.deflationary = metrics.deflationary;
    r.skipped_blocks = state.skipped_blocks;
    r.dropped_txs = state.dropped_txs;
    r.total_txs = state.total_txs;
    r.standby_blocks = state.standby_blocks;
    r.treasury_fund = state.treasury.fund();

    for (const auto& n : state.ledger.nodes()) {
        NodeReportRow row;
        row.id = n.id;
        row.role = n.role;
        row.stake = n.stake;
        row.earnings = state.earnings[n.id - 1];
        row.escrow_balance = state.escrow[n.id - 1].balance();
        row.withdrawn = state.withdrawn[n.id - 1];
        row.treasury_shares = state.treasury.shares_of(n.id);
        r.per_node.push_back(row);
    }
    r.series = state.series;
    return r;
}

TokenAmount SimulationReport::mean_earnings(Role role) const
{
    TokenAmount sum;
    u64 count = 0;
    for (const auto& row : per_node) {
        if (row.role != role)
            continue;
        sum += row.earnings.total();
        ++count;
    }
    return count == 0 ? TokenAmount{} : sum.mul_div(1, count);
}

} // namespace stakesim
