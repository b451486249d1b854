#include "stakesim/scenario.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace stakesim {

namespace {

std::string trim(std::string_view s)
{
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

void flatten_json(const nlohmann::json& j, const std::string& prefix,
                  FlatConfig& out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten_json(it.value(),
                         prefix.empty() ? it.key() : prefix + "." + it.key(),
                         out);
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i)
            flatten_json(j[i], prefix + "." + std::to_string(i), out);
    } else if (j.is_string()) {
        out[prefix] = j.get<std::string>();
    } else {
        out[prefix] = j.dump();
    }
}

} // namespace

FlatConfig parse_config_text(const std::string& content)
{
    FlatConfig out;
    std::istringstream in(content);
    std::string line;
    std::string section;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (t.front() == '[' && t.back() == ']') {
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": empty key");
        if (!section.empty())
            key = section + "." + key;
        out[key] = value;
    }
    return out;
}

FlatConfig parse_config_json(const std::string& content)
{
    nlohmann::json j = nlohmann::json::parse(content);
    FlatConfig out;
    flatten_json(j, "", out);
    return out;
}

FlatConfig load_config_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == '{')
            return parse_config_json(content);
        break;
    }
    return parse_config_text(content);
}

Rational TrafficProfile::multiplier_at_day(const Rational& day) const
{
    Rational mult(1, 1);
    for (const auto& w : bursts)
        if (!(day < w.from_day))
            mult = w.multiplier;
    return mult;
}

namespace {

/// Typed accessor over the flat map: every read consumes its key, so
/// leftovers can be reported as unknown-key diagnostics.
class ConfigReader {
public:
    ConfigReader(const FlatConfig& flat, std::vector<Diagnostic>& diags)
        : flat_(flat), diags_(diags)
    {
    }

    bool has(const std::string& key) const { return flat_.contains(key); }

    void error(const std::string& key, const std::string& msg)
    {
        diags_.push_back({key, msg});
    }

    std::string str(const std::string& key, const std::string& fallback)
    {
        auto it = flat_.find(key);
        if (it == flat_.end())
            return fallback;
        seen_.insert(key);
        return it->second;
    }

    u64 integer(const std::string& key, u64 fallback)
    {
        auto it = flat_.find(key);
        if (it == flat_.end())
            return fallback;
        seen_.insert(key);
        try {
            u128 v = detail::parse_u128(it->second);
            if (v > static_cast<u128>(~static_cast<u64>(0)))
                throw std::overflow_error("too large");
            return static_cast<u64>(v);
        } catch (const std::exception&) {
            error(key, "expected a non-negative integer, got '" + it->second +
                           "'");
            return fallback;
        }
    }

    TokenAmount amount(const std::string& key, TokenAmount fallback)
    {
        auto it = flat_.find(key);
        if (it == flat_.end())
            return fallback;
        seen_.insert(key);
        try {
            return TokenAmount::parse(it->second);
        } catch (const std::exception&) {
            error(key, "expected a non-negative token amount (at most 18 "
                       "fractional digits), got '" +
                           it->second + "'");
            return fallback;
        }
    }

    Rational rate(const std::string& key, Rational fallback)
    {
        auto it = flat_.find(key);
        if (it == flat_.end())
            return fallback;
        seen_.insert(key);
        try {
            return Rational::parse(it->second);
        } catch (const std::exception&) {
            error(key, "expected a rate ('10%', '0.1' or '1/10'), got '" +
                           it->second + "'");
            return fallback;
        }
    }

    bool boolean(const std::string& key, bool fallback)
    {
        auto it = flat_.find(key);
        if (it == flat_.end())
            return fallback;
        seen_.insert(key);
        if (it->second == "true")
            return true;
        if (it->second == "false")
            return false;
        error(key, "expected true or false, got '" + it->second + "'");
        return fallback;
    }

    std::string choice(const std::string& key, const std::string& fallback,
                       std::initializer_list<const char*> options)
    {
        std::string v = str(key, fallback);
        for (const char* o : options)
            if (v == o)
                return v;
        std::string expected;
        for (const char* o : options)
            expected += expected.empty() ? o : std::string("|") + o;
        error(key, "expected one of " + expected + ", got '" + v + "'");
        return fallback;
    }

    /// Sorted indices N for which any key `prefix.N.suffix` exists.
    std::vector<u64> group_indices(const std::string& prefix)
    {
        std::set<u64> found;
        std::string p = prefix + ".";
        for (auto it = flat_.lower_bound(p);
             it != flat_.end() && it->first.compare(0, p.size(), p) == 0;
             ++it) {
            std::string rest = it->first.substr(p.size());
            auto dot = rest.find('.');
            if (dot == std::string::npos || dot == 0)
                continue;
            std::string idx = rest.substr(0, dot);
            if (std::all_of(idx.begin(), idx.end(), [](char c) {
                    return c >= '0' && c <= '9';
                }))
                found.insert(std::stoull(idx));
        }
        return {found.begin(), found.end()};
    }

    void report_unknown_keys()
    {
        for (const auto& [key, value] : flat_)
            if (!seen_.contains(key))
                diags_.push_back({key, "unknown configuration key"});
    }

private:
    const FlatConfig& flat_;
    std::vector<Diagnostic>& diags_;
    std::set<std::string> seen_;
};

RewardScheme scheme_defaults(const std::string& name)
{
    if (name == "scheme1")
        return RewardScheme::scheme1();
    if (name == "scheme2")
        return RewardScheme::scheme2();
    if (name == "eth_style")
        return RewardScheme::eth_style(percent(0));
    return RewardScheme::current_model();
}

} // namespace

ScenarioConfig ScenarioConfig::from_flat(const FlatConfig& flat,
                                         std::vector<Diagnostic>& diags)
{
    ConfigReader r(flat, diags);
    ScenarioConfig cfg;

    // Reward scheme and overrides.
    std::string scheme_name = r.choice(
        "scheme", "current", {"current", "scheme1", "scheme2", "eth_style"});
    cfg.scheme = scheme_defaults(scheme_name);
    cfg.scheme.validator_rate =
        r.rate("scheme.validator_rate", cfg.scheme.validator_rate);
    cfg.scheme.standby_rate =
        r.rate("scheme.standby_rate", cfg.scheme.standby_rate);
    cfg.scheme.issuance_rate =
        r.rate("scheme.issuance_rate", cfg.scheme.issuance_rate);
    std::string dispo = r.choice(
        "scheme.fee_disposition",
        cfg.scheme.fee_disposition == FeeDisposition::Burn ? "burn"
                                                           : "distribute",
        {"distribute", "burn"});
    cfg.scheme.fee_disposition =
        dispo == "burn" ? FeeDisposition::Burn : FeeDisposition::Distribute;

    // Network census parameters.
    NetworkParams defaults = NetworkParams::xdc_mainnet();
    cfg.network.n_validators =
        r.integer("network.validators", defaults.n_validators);
    cfg.network.n_standby = r.integer("network.standby", defaults.n_standby);
    cfg.network.stake_per_node =
        r.amount("network.stake_per_node", defaults.stake_per_node);
    cfg.network.validator_rate =
        r.rate("network.validator_rate", defaults.validator_rate);
    cfg.network.standby_rate =
        r.rate("network.standby_rate", defaults.standby_rate);
    cfg.network.total_supply =
        r.amount("network.total_supply", defaults.total_supply);
    if (cfg.network.n_validators == 0)
        r.error("network.validators", "must be positive");
    if (cfg.network.n_standby == 0)
        r.error("network.standby", "must be positive");
    if (cfg.network.stake_per_node.is_zero())
        r.error("network.stake_per_node", "must be positive");
    if (cfg.network.total_supply.is_zero())
        r.error("network.total_supply", "must be positive");

    // Node census: explicit groups, or derived from the network params.
    for (u64 i : r.group_indices("census")) {
        std::string p = "census." + std::to_string(i);
        CensusGroup g;
        g.count = r.integer(p + ".count", 1);
        std::string role =
            r.choice(p + ".role", "validator", {"validator", "standby"});
        g.role = role == "standby" ? Role::Standby : Role::Validator;
        g.stake = r.amount(p + ".stake", cfg.network.stake_per_node);
        g.lock_years = static_cast<u32>(r.integer(p + ".lock_years", 1));
        g.availability = r.rate(p + ".availability", Rational(1, 1));
        if (g.count == 0)
            r.error(p + ".count", "must be positive");
        if (g.lock_years == 0)
            r.error(p + ".lock_years", "must be at least 1");
        if (Rational(1, 1) < g.availability)
            r.error(p + ".availability", "must be in [0, 1]");
        if (g.stake < cfg.network.stake_per_node)
            r.error(p + ".stake", "below the minimum stake of " +
                                      cfg.network.stake_per_node.to_string());
        cfg.census.push_back(g);
    }
    if (cfg.census.empty()) {
        cfg.census.push_back({cfg.network.n_validators, Role::Validator,
                              cfg.network.stake_per_node, 1, Rational(1, 1)});
        cfg.census.push_back({cfg.network.n_standby, Role::Standby,
                              cfg.network.stake_per_node, 1, Rational(1, 1)});
    }
    u64 census_validators = 0;
    for (const auto& g : cfg.census)
        if (g.role == Role::Validator)
            census_validators += g.count;
    if (census_validators > cfg.network.n_validators)
        r.error("census", "declares " + std::to_string(census_validators) +
                              " validators but network.validators caps the "
                              "set at " +
                              std::to_string(cfg.network.n_validators));
    if (census_validators == 0)
        r.error("census", "declares no validators");

    // Traffic.
    cfg.traffic.mean_tps = r.rate("traffic.mean_tps", Rational(0, 1));
    cfg.traffic.reference_tps =
        r.rate("traffic.reference_tps", Rational(50, 1));
    cfg.traffic.avg_gas_per_tx = r.integer("traffic.avg_gas_per_tx", 21'000);
    cfg.traffic.poisson = r.boolean("traffic.poisson", true);
    cfg.traffic.tip_min =
        r.amount("traffic.tip_min", TokenAmount::parse("0.001"));
    cfg.traffic.tip_max =
        r.amount("traffic.tip_max", TokenAmount::parse("0.01"));
    if (cfg.traffic.reference_tps.is_zero())
        r.error("traffic.reference_tps", "must be positive");
    if (cfg.traffic.avg_gas_per_tx == 0)
        r.error("traffic.avg_gas_per_tx", "must be positive");
    if (cfg.traffic.tip_max < cfg.traffic.tip_min ||
        cfg.traffic.tip_min.is_zero())
        r.error("traffic.tip_min", "tip bounds must satisfy 0 < min <= max");
    for (u64 i : r.group_indices("traffic.burst")) {
        std::string p = "traffic.burst." + std::to_string(i);
        BurstWindow w;
        w.from_day = r.rate(p + ".from_day", Rational(0, 1));
        w.multiplier = r.rate(p + ".multiplier", Rational(1, 1));
        if (!cfg.traffic.bursts.empty() &&
            !(cfg.traffic.bursts.back().from_day < w.from_day))
            r.error(p + ".from_day", "burst windows must start in increasing "
                                     "order");
        cfg.traffic.bursts.push_back(w);
    }

    // Fee market.
    cfg.initial_base_fee = r.amount(
        "fee_market.initial_base_fee",
        TokenAmount::parse("0.000000009523809523")); // ~0.0002 XDC / 21k gas
    if (cfg.initial_base_fee.is_zero())
        r.error("fee_market.initial_base_fee", "must be positive");
    cfg.gas_target = r.integer("fee_market.gas_target", 0);
    cfg.fixed_multiplier = r.integer("fee_market.fixed_multiplier", 0);
    std::string tip_mode =
        r.choice("fee_market.tip_mode", "augment", {"augment", "replace"});
    cfg.tip_mode = tip_mode == "replace" ? TipMode::Replace : TipMode::Augment;
    cfg.tier_table = FeeTierTable::standard();
    auto tier_idx = r.group_indices("fee_market.tier");
    if (!tier_idx.empty()) {
        cfg.tier_table.tiers.clear();
        for (u64 i : tier_idx) {
            std::string p = "fee_market.tier." + std::to_string(i);
            FeeTier t;
            t.tps_ratio_lower_bound = r.rate(p + ".bound", Rational(1, 1));
            t.multiplier = r.integer(p + ".multiplier", 1);
            cfg.tier_table.tiers.push_back(t);
        }
    }
    cfg.tier_table.tip_activation_ratio =
        r.rate("fee_market.tip_activation_ratio", Rational(100, 1));
    try {
        cfg.tier_table.validate();
    } catch (const std::exception& e) {
        r.error("fee_market.tier", e.what());
    }
    cfg.tip_config.min_tip = cfg.traffic.tip_min;
    cfg.tip_config.max_tip = cfg.traffic.tip_max;

    std::string share = r.choice("fees.share_policy", "per_producer",
                                 {"per_producer", "pooled"});
    cfg.share_policy = share == "pooled" ? FeeSharePolicy::Pooled
                                         : FeeSharePolicy::PerProducer;
    std::string policy = r.choice("producer.policy", "round_robin",
                                  {"round_robin", "stake_lottery"});
    cfg.producer_policy = policy == "stake_lottery"
                              ? ProducerPolicy::StakeLottery
                              : ProducerPolicy::RoundRobin;

    // Escrow.
    cfg.escrow.enabled = r.boolean("escrow.enabled", false);
    cfg.escrow.zero_fee_age_days = r.integer("escrow.zero_fee_age_days", 365);
    if (cfg.escrow.zero_fee_age_days == 0)
        r.error("escrow.zero_fee_age_days", "must be positive");
    cfg.escrow.table =
        WithdrawalFeeTable::standard(cfg.escrow.zero_fee_age_days);
    auto escrow_tiers = r.group_indices("escrow.tier");
    if (!escrow_tiers.empty()) {
        cfg.escrow.table.tiers.clear();
        for (u64 i : escrow_tiers) {
            std::string p = "escrow.tier." + std::to_string(i);
            WithdrawalTier t;
            t.amount_lower_bound = r.amount(p + ".bound", TokenAmount{});
            t.fee_rate = r.rate(p + ".rate", Rational(0, 1));
            cfg.escrow.table.tiers.push_back(t);
        }
    }
    cfg.escrow.table.threshold =
        r.amount("escrow.threshold",
                 cfg.escrow.table.tiers.empty()
                     ? TokenAmount{}
                     : cfg.escrow.table.tiers.front().amount_lower_bound);
    std::string decay =
        r.choice("escrow.decay", "linear", {"linear", "step"});
    cfg.escrow.table.decay =
        decay == "step" ? FeeDecayMode::StepAtThreshold : FeeDecayMode::Linear;
    try {
        cfg.escrow.table.validate();
    } catch (const std::exception& e) {
        r.error("escrow.tier", e.what());
    }
    cfg.escrow.withdraw_every_days =
        r.integer("escrow.withdraw_every_days", 0);

    // Treasury.
    cfg.treasury.enabled = r.boolean("treasury.enabled", false);
    std::string entry = r.str("treasury.entry_fee_rate", "escrow");
    if (entry == "escrow") {
        cfg.treasury.entry_fee_from_escrow = true;
    } else {
        cfg.treasury.entry_fee_from_escrow = false;
        try {
            cfg.treasury.entry_fee_rate = Rational::parse(entry);
        } catch (const std::exception&) {
            r.error("treasury.entry_fee_rate",
                    "expected a rate or 'escrow', got '" + entry + "'");
        }
    }
    cfg.treasury.epoch_budget =
        r.amount("treasury.epoch_budget", TokenAmount{});
    cfg.treasury.invest_fraction =
        r.rate("treasury.invest_fraction", Rational(0, 1));
    if (Rational(1, 1) < cfg.treasury.invest_fraction)
        r.error("treasury.invest_fraction", "must be in [0, 1]");
    for (u64 i : r.group_indices("treasury.project")) {
        std::string p = "treasury.project." + std::to_string(i);
        Project proj;
        proj.id = r.str(p + ".id", "project-" + std::to_string(i));
        proj.performance_score = r.rate(p + ".score", Rational(1, 1));
        proj.fee_return_rate = r.rate(p + ".fee_return_rate", Rational(0, 1));
        cfg.treasury.projects.push_back(proj);
    }
    if (cfg.treasury.enabled && cfg.treasury.projects.empty() &&
        !cfg.treasury.epoch_budget.is_zero())
        r.error("treasury.project", "epoch budget set but no projects "
                                    "declared");

    // Loyalty emission mode.
    cfg.loyalty.enabled = r.boolean("loyalty.enabled", false);
    cfg.loyalty.pool =
        r.amount("loyalty.pool", TokenAmount::from_tokens(194'400'000));
    cfg.loyalty.include_standby = r.boolean("loyalty.include_standby", true);

    // Run shape.
    cfg.block_seconds = r.integer("run.block_seconds", 2);
    if (cfg.block_seconds == 0 || 86'400 % cfg.block_seconds != 0)
        r.error("run.block_seconds", "must divide 86400");
    std::string gran = r.choice("run.granularity", "per_epoch",
                                {"per_epoch", "per_block"});
    cfg.granularity = gran == "per_block" ? Granularity::PerBlock
                                          : Granularity::PerEpoch;
    bool has_days = r.has("run.duration_days");
    bool has_blocks = r.has("run.duration_blocks");
    u64 days = r.integer("run.duration_days", 0);
    u64 blocks = r.integer("run.duration_blocks", 0);
    if (has_days == has_blocks) {
        r.error("run.duration_days",
                "exactly one of run.duration_days and run.duration_blocks "
                "is required");
    } else if (cfg.block_seconds != 0 && 86'400 % cfg.block_seconds == 0) {
        cfg.duration_blocks =
            has_days ? days * cfg.blocks_per_epoch() : blocks;
        if (cfg.duration_blocks == 0)
            r.error(has_days ? "run.duration_days" : "run.duration_blocks",
                    "must be positive");
        if (cfg.granularity == Granularity::PerEpoch &&
            cfg.duration_blocks % cfg.blocks_per_epoch() != 0)
            r.error("run.duration_blocks",
                    "per_epoch granularity needs a whole number of days");
    }
    if (!r.has("run.seed"))
        r.error("run.seed", "a seed is mandatory; runs must be reproducible");
    cfg.seed = r.integer("run.seed", 0);

    // Auto gas target: reference traffic exactly fills the target.
    if (cfg.gas_target == 0 && !cfg.traffic.reference_tps.is_zero()) {
        Rational target = cfg.traffic.reference_tps *
                          Rational(cfg.block_seconds, 1) *
                          Rational(cfg.traffic.avg_gas_per_tx, 1);
        u128 t = target.num() / target.den();
        if (t == 0 || t > static_cast<u128>(~static_cast<u64>(0)) / 2)
            r.error("fee_market.gas_target",
                    "auto gas target out of range; set it explicitly");
        else
            cfg.gas_target = static_cast<u64>(t);
    }

    r.report_unknown_keys();
    std::sort(diags.begin(), diags.end(),
              [](const Diagnostic& a, const Diagnostic& b) {
                  return a.key < b.key;
              });
    return cfg;
}

FlatConfig ScenarioConfig::to_flat() const
{
    FlatConfig f;
    f["scheme"] = scheme.name();
    f["scheme.validator_rate"] = scheme.validator_rate.to_fraction_string();
    f["scheme.standby_rate"] = scheme.standby_rate.to_fraction_string();
    f["scheme.issuance_rate"] = scheme.issuance_rate.to_fraction_string();
    f["scheme.fee_disposition"] =
        scheme.fee_disposition == FeeDisposition::Burn ? "burn" : "distribute";

    f["network.validators"] = std::to_string(network.n_validators);
    f["network.standby"] = std::to_string(network.n_standby);
    f["network.stake_per_node"] = network.stake_per_node.to_string();
    f["network.validator_rate"] = network.validator_rate.to_fraction_string();
    f["network.standby_rate"] = network.standby_rate.to_fraction_string();
    f["network.total_supply"] = network.total_supply.to_string();

    for (size_t i = 0; i < census.size(); ++i) {
        std::string p = "census." + std::to_string(i);
        f[p + ".count"] = std::to_string(census[i].count);
        f[p + ".role"] =
            census[i].role == Role::Validator ? "validator" : "standby";
        f[p + ".stake"] = census[i].stake.to_string();
        f[p + ".lock_years"] = std::to_string(census[i].lock_years);
        f[p + ".availability"] = census[i].availability.to_fraction_string();
    }

    f["traffic.mean_tps"] = traffic.mean_tps.to_fraction_string();
    f["traffic.reference_tps"] = traffic.reference_tps.to_fraction_string();
    f["traffic.avg_gas_per_tx"] = std::to_string(traffic.avg_gas_per_tx);
    f["traffic.poisson"] = traffic.poisson ? "true" : "false";
    f["traffic.tip_min"] = traffic.tip_min.to_string();
    f["traffic.tip_max"] = traffic.tip_max.to_string();
    for (size_t i = 0; i < traffic.bursts.size(); ++i) {
        std::string p = "traffic.burst." + std::to_string(i);
        f[p + ".from_day"] = traffic.bursts[i].from_day.to_fraction_string();
        f[p + ".multiplier"] =
            traffic.bursts[i].multiplier.to_fraction_string();
    }

    f["fee_market.initial_base_fee"] = initial_base_fee.to_string();
    f["fee_market.gas_target"] = std::to_string(gas_target);
    f["fee_market.fixed_multiplier"] = std::to_string(fixed_multiplier);
    f["fee_market.tip_mode"] =
        tip_mode == TipMode::Replace ? "replace" : "augment";
    for (size_t i = 0; i < tier_table.tiers.size(); ++i) {
        std::string p = "fee_market.tier." + std::to_string(i);
        f[p + ".bound"] =
            tier_table.tiers[i].tps_ratio_lower_bound.to_fraction_string();
        f[p + ".multiplier"] = std::to_string(tier_table.tiers[i].multiplier);
    }
    f["fee_market.tip_activation_ratio"] =
        tier_table.tip_activation_ratio.to_fraction_string();
    f["fees.share_policy"] =
        share_policy == FeeSharePolicy::Pooled ? "pooled" : "per_producer";
    f["producer.policy"] = producer_policy == ProducerPolicy::StakeLottery
                               ? "stake_lottery"
                               : "round_robin";

    f["escrow.enabled"] = escrow.enabled ? "true" : "false";
    f["escrow.zero_fee_age_days"] = std::to_string(escrow.zero_fee_age_days);
    f["escrow.decay"] = escrow.table.decay == FeeDecayMode::StepAtThreshold
                            ? "step"
                            : "linear";
    f["escrow.threshold"] = escrow.table.threshold.to_string();
    for (size_t i = 0; i < escrow.table.tiers.size(); ++i) {
        std::string p = "escrow.tier." + std::to_string(i);
        f[p + ".bound"] = escrow.table.tiers[i].amount_lower_bound.to_string();
        f[p + ".rate"] = escrow.table.tiers[i].fee_rate.to_fraction_string();
    }
    f["escrow.withdraw_every_days"] =
        std::to_string(escrow.withdraw_every_days);

    f["treasury.enabled"] = treasury.enabled ? "true" : "false";
    f["treasury.entry_fee_rate"] =
        treasury.entry_fee_from_escrow
            ? "escrow"
            : treasury.entry_fee_rate.to_fraction_string();
    f["treasury.epoch_budget"] = treasury.epoch_budget.to_string();
    f["treasury.invest_fraction"] =
        treasury.invest_fraction.to_fraction_string();
    for (size_t i = 0; i < treasury.projects.size(); ++i) {
        std::string p = "treasury.project." + std::to_string(i);
        f[p + ".id"] = treasury.projects[i].id;
        f[p + ".score"] =
            treasury.projects[i].performance_score.to_fraction_string();
        f[p + ".fee_return_rate"] =
            treasury.projects[i].fee_return_rate.to_fraction_string();
    }

    f["loyalty.enabled"] = loyalty.enabled ? "true" : "false";
    f["loyalty.pool"] = loyalty.pool.to_string();
    f["loyalty.include_standby"] = loyalty.include_standby ? "true" : "false";

    f["run.duration_blocks"] = std::to_string(duration_blocks);
    f["run.granularity"] =
        granularity == Granularity::PerBlock ? "per_block" : "per_epoch";
    f["run.block_seconds"] = std::to_string(block_seconds);
    f["run.seed"] = std::to_string(seed);
    return f;
}

} // namespace stakesim
