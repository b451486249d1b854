#pragma once

#include "stakesim/economics.hpp"
#include "stakesim/escrow.hpp"
#include "stakesim/fee_market.hpp"
#include "stakesim/ledger.hpp"
#include "stakesim/reward.hpp"
#include "stakesim/treasury.hpp"

#include <map>
#include <string>
#include <vector>

namespace stakesim {

/// Scenario files are flat `key = value` text with dotted key paths
/// (sections via `[prefix]` headers) or JSON with the identical schema;
/// both forms load into this ordered map.
using FlatConfig = std::map<std::string, std::string>;

struct Diagnostic {
    std::string key;
    std::string message;
};

FlatConfig parse_config_text(const std::string& content);
FlatConfig parse_config_json(const std::string& content);
/// Reads a file and dispatches on the leading character ('{' = JSON).
FlatConfig load_config_file(const std::string& path);

struct CensusGroup {
    u64 count = 0;
    Role role = Role::Validator;
    TokenAmount stake;
    u32 lock_years = 1;
    Rational availability = Rational(1, 1);
};

struct BurstWindow {
    Rational from_day;
    Rational multiplier;
};

struct TrafficProfile {
    Rational mean_tps;
    Rational reference_tps = Rational(50, 1);
    u64 avg_gas_per_tx = 21'000;
    bool poisson = true; // false: deterministic counts at the exact mean
    TokenAmount tip_min = TokenAmount::parse("0.001");
    TokenAmount tip_max = TokenAmount::parse("0.01");
    std::vector<BurstWindow> bursts;

    Rational multiplier_at_day(const Rational& day) const;
};

enum class Granularity { PerBlock, PerEpoch };
enum class TipMode { Augment, Replace };
enum class FeeSharePolicy { PerProducer, Pooled };

struct EscrowConfig {
    bool enabled = false;
    WithdrawalFeeTable table = WithdrawalFeeTable::standard(365);
    u64 zero_fee_age_days = 365;
    u64 withdraw_every_days = 0; // 0 = nodes never withdraw
};

struct TreasuryConfig {
    bool enabled = false;
    bool entry_fee_from_escrow = true; // use the age-0 withdrawal fee
    Rational entry_fee_rate;
    TokenAmount epoch_budget;
    Rational invest_fraction; // share of liquid income invested per epoch
    std::vector<Project> projects;
};

struct LoyaltyConfig {
    bool enabled = false;
    TokenAmount pool = TokenAmount::from_tokens(194'400'000);
    bool include_standby = true;
};

/// Full parameterization of one simulation run. A seed is mandatory:
/// runs never consult ambient randomness or time.
struct ScenarioConfig {
    RewardScheme scheme = RewardScheme::current_model();
    NetworkParams network = NetworkParams::xdc_mainnet();
    std::vector<CensusGroup> census;
    TrafficProfile traffic;

    TokenAmount initial_base_fee; // per gas
    u64 gas_target = 0;           // resolved; config value 0 means auto
    u64 fixed_multiplier = 0;     // 0 = use the tier table
    TipMode tip_mode = TipMode::Augment;
    FeeTierTable tier_table = FeeTierTable::standard();
    TipConfig tip_config;
    FeeSharePolicy share_policy = FeeSharePolicy::PerProducer;
    ProducerPolicy producer_policy = ProducerPolicy::RoundRobin;

    EscrowConfig escrow;
    TreasuryConfig treasury;
    LoyaltyConfig loyalty;

    u64 duration_blocks = 0;
    Granularity granularity = Granularity::PerEpoch;
    u64 block_seconds = 2;
    u64 seed = 0;

    u64 blocks_per_epoch() const { return 86'400 / block_seconds; }
    u64 blocks_per_year() const { return 365 * blocks_per_epoch(); }

    /// Builds and validates a scenario; on any violation the returned
    /// config is unusable and `diags` names each offending key.
    static ScenarioConfig from_flat(const FlatConfig& flat,
                                    std::vector<Diagnostic>& diags);

    /// Canonical resolved key map; reloading it reproduces this config.
    FlatConfig to_flat() const;
};

} // namespace stakesim
