#pragma once

#include "stakesim/scenario.hpp"

#include <optional>
#include <vector>

namespace stakesim {

struct NodeEarnings {
    TokenAmount staking_reward;
    TokenAmount fee_share;
    TokenAmount tips;
    TokenAmount penalties;
    TokenAmount total() const
    {
        return staking_reward + fee_share + tips - penalties;
    }
};

struct BlockTraffic {
    std::vector<Transaction> txs;
    Rational tps_ratio;
    bool tips_active = false;
};

/// Transaction count over a span: Poisson at the profile's
/// burst-adjusted mean, or the exact running mean when profile.poisson
/// is false (the fractional remainder lives in `carry`).
u64 traffic_count(const TrafficProfile& profile, Rng& traffic_rng,
                  u64 span_seconds, const Rational& day, Rational& carry);

/// One block's synthetic traffic. Tips are drawn uniformly from the
/// configured bounds while the tip mechanism is active, zero otherwise.
BlockTraffic generate_traffic(const TrafficProfile& profile,
                              const FeeTierTable& tiers, Rng& traffic_rng,
                              Rng& tip_rng, u64 span_seconds,
                              const Rational& day, Rational& carry,
                              u64& next_tx_id, u64 height,
                              const TipConfig& tip_config);

struct SeriesRow {
    u64 epoch = 0;  // 1-based; a trailing partial epoch keeps its index
    u64 height = 0; // end height
    TokenAmount supply;
    TokenAmount base_fee;
    Rational tps; // realized transactions per second over the rows' span
    TokenAmount minted;
    TokenAmount burned;
};

/// Full mutable state of one deterministic run. A SimState is owned by
/// exactly one run; parallel sweeps each build their own.
class SimState {
public:
    SimState(const ScenarioConfig& cfg);

    const ScenarioConfig& config() const { return *cfg_; }

    u64 height = 0;
    TokenAmount initial_supply;
    TokenAmount total_supply;
    TokenAmount cum_minted;
    TokenAmount cum_fee_burned;
    TokenAmount cum_withdraw_burned;
    TokenAmount cum_fees_charged;
    TokenAmount cum_tips;
    u64 skipped_blocks = 0;
    u64 dropped_txs = 0;
    u64 total_txs = 0;
    u64 standby_blocks = 0; // blocks produced by promoted standbys

    LedgerState ledger;
    FeeMarketState fee_state;
    std::vector<EscrowAccount> escrow;     // by node index
    std::vector<TokenAmount> liquid;       // spendable income per node
    std::vector<TokenAmount> withdrawn;    // escrow payouts received
    TreasuryState treasury;
    std::vector<NodeEarnings> earnings;
    std::vector<SeriesRow> series;

    TokenAmount burned_total() const
    {
        return cum_fee_burned + cum_withdraw_burned;
    }

    /// Supply identity: supply == initial + minted - burned, exactly.
    /// Throws std::logic_error when violated.
    void audit() const;

    // One block of the per-block loop: traffic, producer selection
    // (standby promotion on validator unavailability), tip ordering,
    // fee split and burn, base-fee update, staking accrual, and epoch
    // bookkeeping on the day boundary.
    void step_block();

    // One aggregated day of the per-epoch loop; staking accrual is
    // exactly the per-block closed form, fee flows use the epoch-mean
    // traffic.
    void step_epoch();

    // Closes a trailing partial epoch (per-block runs whose duration is
    // not a whole number of days).
    void finish();

private:
    struct AccrualGroup {
        u128 annual_atoms;
        u64 count;
        u128 entitled_prev = 0;
    };

    const ScenarioConfig* cfg_;
    Rng traffic_rng_;
    Rng tip_rng_;
    Rng avail_rng_;
    Rng select_rng_;
    u64 tx_counter_ = 0;

    std::vector<u128> node_annual_;  // per-node annual staking atoms
    std::vector<u128> node_minted_;  // synced at epoch boundaries
    std::vector<AccrualGroup> groups_;
    u128 loyalty_entitled_prev_ = 0;

    std::vector<TokenAmount> epoch_income_; // per-node income this epoch
    TokenAmount epoch_fee_pool_;            // pooled share policy
    TokenAmount epoch_minted_;
    TokenAmount epoch_burned_;
    u64 epoch_txs_ = 0;
    u64 epoch_start_height_ = 0;

    Rational traffic_carry_; // deterministic-traffic remainder

    void accrue_staking_block();
    void sync_node_staking();
    void run_epoch_boundary();
    std::vector<bool> draw_availability();
    void attribute_fee(NodeId producer, TokenAmount base_component);
    Rational entry_fee_rate(TokenAmount amount) const;
};

struct NodeReportRow {
    NodeId id = 0;
    Role role = Role::Standby;
    TokenAmount stake;
    NodeEarnings earnings;
    TokenAmount escrow_balance;
    TokenAmount withdrawn;
    u128 treasury_shares = 0;
};

struct SimulationReport {
    FlatConfig config_echo;
    u64 seed = 0;
    std::string scheme;
    u64 duration_blocks = 0;
    u64 block_seconds = 0;
    std::string granularity;

    TokenAmount initial_supply;
    TokenAmount final_supply;
    TokenAmount total_minted;
    TokenAmount total_burned;
    TokenAmount fee_burned;
    TokenAmount withdrawal_burned;
    TokenAmount total_fees_charged;
    TokenAmount total_tips;
    TokenAmount undistributed_dust;
    SignedAmount net_growth;
    Rational realized_inflation; // annualized |net|/initial
    bool deflationary = false;
    u64 skipped_blocks = 0;
    u64 dropped_txs = 0;
    u64 total_txs = 0;
    u64 standby_blocks = 0;
    TokenAmount treasury_fund;

    std::vector<NodeReportRow> per_node;
    std::vector<SeriesRow> series;

    TokenAmount mean_earnings(Role role) const;
};

struct RunOptions {
    bool audit_every_step = false;
};

/// Runs one scenario to completion. Deterministic: identical config and
/// seed produce an identical report, byte-for-byte once serialized.
SimulationReport run_scenario(const ScenarioConfig& cfg,
                              const RunOptions& opts = {});

/// Annualized realized inflation of a finished state; throws on an
/// empty run.
struct SummaryMetrics {
    SignedAmount net_minted;
    Rational realized_inflation;
    bool deflationary = false;
};
SummaryMetrics compute_metrics(const SimState& state);

} // namespace stakesim
