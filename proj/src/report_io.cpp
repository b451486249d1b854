#include "stakesim/report_io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace stakesim {

namespace {

const char* role_name(Role r)
{
    return r == Role::Validator ? "validator" : "standby";
}

} // namespace

std::string inflation_percent_string(const SimulationReport& report,
                                     int decimals)
{
    std::string s = report.realized_inflation.to_percent_string(decimals);
    if (report.deflationary && s.find_first_not_of("0.") != std::string::npos)
        return "-" + s;
    return s;
}

std::string report_to_json(const SimulationReport& report)
{
    nlohmann::json j; // std::map-backed: keys serialize sorted

    nlohmann::json config = nlohmann::json::object();
    for (const auto& [key, value] : report.config_echo)
        config[key] = value;
    j["config"] = config;
    j["seed"] = report.seed;

    nlohmann::json s;
    s["scheme"] = report.scheme;
    s["granularity"] = report.granularity;
    s["duration_blocks"] = report.duration_blocks;
    s["block_seconds"] = report.block_seconds;
    s["initial_supply_xdc"] = report.initial_supply.to_string();
    s["final_supply_xdc"] = report.final_supply.to_string();
    s["total_minted_xdc"] = report.total_minted.to_string();
    s["total_burned_xdc"] = report.total_burned.to_string();
    s["fee_burned_xdc"] = report.fee_burned.to_string();
    s["withdrawal_burned_xdc"] = report.withdrawal_burned.to_string();
    s["total_fees_charged_xdc"] = report.total_fees_charged.to_string();
    s["total_tips_xdc"] = report.total_tips.to_string();
    s["undistributed_dust_atoms"] = report.undistributed_dust.atoms_string();
    s["net_supply_growth_xdc"] = report.net_growth.to_string();
    s["realized_inflation_percent"] = inflation_percent_string(report, 6);
    s["realized_inflation_percent_3dp"] = inflation_percent_string(report, 3);
    s["skipped_blocks"] = report.skipped_blocks;
    s["dropped_txs"] = report.dropped_txs;
    s["total_txs"] = report.total_txs;
    s["standby_blocks"] = report.standby_blocks;
    s["treasury_fund_xdc"] = report.treasury_fund.to_string();
    s["mean_validator_earnings_xdc"] =
        report.mean_earnings(Role::Validator).to_string();
    s["mean_standby_earnings_xdc"] =
        report.mean_earnings(Role::Standby).to_string();
    j["summary"] = s;

    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& row : report.per_node) {
        nlohmann::json n;
        n["id"] = row.id;
        n["role"] = role_name(row.role);
        n["stake_xdc"] = row.stake.to_string();
        n["staking_reward_xdc"] = row.earnings.staking_reward.to_string();
        n["fee_share_xdc"] = row.earnings.fee_share.to_string();
        n["tips_xdc"] = row.earnings.tips.to_string();
        n["penalties_xdc"] = row.earnings.penalties.to_string();
        n["total_earnings_xdc"] = row.earnings.total().to_string();
        n["escrow_balance_xdc"] = row.escrow_balance.to_string();
        n["withdrawn_xdc"] = row.withdrawn.to_string();
        n["treasury_shares"] = detail::u128_to_string(row.treasury_shares);
        nodes.push_back(n);
    }
    j["per_node"] = nodes;
    j["series_rows"] = report.series.size();

    return j.dump(2) + "\n";
}

std::string report_timeseries_csv(const SimulationReport& report)
{
    std::ostringstream out;
    out << "epoch,height,supply_xdc,base_fee_xdc,tps,minted_xdc,burned_xdc\n";
    for (const auto& row : report.series) {
        out << row.epoch << ',' << row.height << ','
            << row.supply.to_string() << ',' << row.base_fee.to_string_fixed()
            << ',' << row.tps.to_decimal_string(6) << ','
            << row.minted.to_string() << ',' << row.burned.to_string() << '\n';
    }
    return out.str();
}

std::string report_summary_text(const SimulationReport& report)
{
    std::ostringstream out;
    out << "scheme:                " << report.scheme << '\n'
        << "granularity:           " << report.granularity << " ("
        << report.duration_blocks << " blocks, " << report.block_seconds
        << "s each)\n"
        << "seed:                  " << report.seed << '\n'
        << "initial supply:        " << report.initial_supply.to_string()
        << " XDC\n"
        << "final supply:          " << report.final_supply.to_string()
        << " XDC\n"
        << "total minted:          " << report.total_minted.to_string()
        << " XDC\n"
        << "total burned:          " << report.total_burned.to_string()
        << " XDC (fees " << report.fee_burned.to_string() << ", withdrawals "
        << report.withdrawal_burned.to_string() << ")\n"
        << "fees charged:          " << report.total_fees_charged.to_string()
        << " XDC (tips " << report.total_tips.to_string() << ")\n"
        << "net supply growth:     " << report.net_growth.to_string()
        << " XDC\n"
        << "realized inflation:    " << inflation_percent_string(report, 3)
        << "% annualized\n"
        << "mean validator income: "
        << report.mean_earnings(Role::Validator).to_string() << " XDC\n"
        << "mean standby income:   "
        << report.mean_earnings(Role::Standby).to_string() << " XDC\n"
        << "transactions:          " << report.total_txs << " included, "
        << report.dropped_txs << " dropped\n"
        << "blocks:                " << report.skipped_blocks << " skipped, "
        << report.standby_blocks << " standby-produced\n";
    if (!report.treasury_fund.is_zero())
        out << "treasury fund:         " << report.treasury_fund.to_string()
            << " XDC\n";
    return out.str();
}

} // namespace stakesim
