#pragma once

#include "stakesim/amount.hpp"
#include "stakesim/ledger.hpp"
#include "stakesim/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace stakesim {

struct Project {
    std::string id;
    Rational performance_score; // drives the funding split
    Rational fee_return_rate;   // per-epoch return on outstanding funding
};

/// Ecosystem treasury with pro-rata pool shares: invested amounts mint
/// shares at the prevailing fund/total_shares price, project fee
/// returns raise the price, and redemption pays shares * price. Entry
/// fees stay in the fund without minting shares, so they accrue to all
/// holders.
class TreasuryState {
public:
    using ShareCount = u128; // fixed-point, 1 share atom per token atom

    /// Invests `amount`, charging amount*entry_fee_rate into the fund
    /// unshared; the remainder mints shares for `node`.
    ShareCount invest(NodeId node, TokenAmount amount,
                      const Rational& entry_fee_rate);

    /// Splits `budget` across projects proportionally to performance
    /// score: floor(budget * score_i / sum(scores)); flooring dust
    /// stays in the fund.
    std::vector<std::pair<std::string, TokenAmount>>
    distribute_to_projects(const std::vector<Project>& projects,
                           TokenAmount budget);

    /// Returns project fee revenue into the fund.
    void collect_project_fees(const std::string& project, TokenAmount amount);

    /// Burns `shares` held by `node` for their pro-rata slice of the
    /// fund: floor(shares * fund / total_shares).
    TokenAmount redeem(NodeId node, ShareCount shares);

    TokenAmount fund() const { return fund_; }
    ShareCount total_shares() const { return total_shares_; }
    ShareCount shares_of(NodeId node) const;
    /// fund / total_shares as an exact rational (1 when no shares).
    Rational share_price() const;
    TokenAmount outstanding_allocation(const std::string& project) const;
    const std::map<NodeId, ShareCount>& share_ledger() const
    {
        return share_ledger_;
    }

private:
    TokenAmount fund_;
    ShareCount total_shares_ = 0;
    std::map<NodeId, ShareCount> share_ledger_;
    std::map<std::string, TokenAmount> funded_projects_;
};

} // namespace stakesim
