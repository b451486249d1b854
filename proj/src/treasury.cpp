#include "stakesim/treasury.hpp"

#include <stdexcept>

namespace stakesim {

TreasuryState::ShareCount TreasuryState::invest(NodeId node,
                                                TokenAmount amount,
                                                const Rational& entry_fee_rate)
{
    if (amount.is_zero())
        throw std::invalid_argument("treasury investment of zero");
    if (Rational(1, 1) < entry_fee_rate)
        throw std::invalid_argument("entry fee rate above 100%");

    TokenAmount fee = entry_fee_rate.scale_floor(amount);
    TokenAmount net = amount - fee;

    ShareCount minted;
    if (total_shares_ == 0) {
        // First investor (or fund fully redeemed): price resets to 1.
        // Any residual dust in the fund accrues to the new holder.
        minted = net.atoms();
    } else {
        minted = detail::mul_div_floor(net.atoms(), total_shares_,
                                       fund_.atoms());
    }
    fund_ += amount;
    total_shares_ += minted;
    share_ledger_[node] += minted;
    return minted;
}

std::vector<std::pair<std::string, TokenAmount>>
TreasuryState::distribute_to_projects(const std::vector<Project>& projects,
                                      TokenAmount budget)
{
    if (fund_ < budget)
        throw std::invalid_argument("distribution budget exceeds the fund");

    // Common denominator converts the rational scores into integer
    // weights so each allocation is floor(budget * w_i / W) exactly.
    u128 lcm = 1;
    for (const auto& p : projects) {
        u128 d = p.performance_score.den();
        lcm = detail::checked_mul_u128(lcm / detail::gcd_u128(lcm, d), d);
    }
    u128 weight_sum = 0;
    std::vector<u128> weights;
    weights.reserve(projects.size());
    for (const auto& p : projects) {
        u128 w = detail::checked_mul_u128(p.performance_score.num(),
                                          lcm / p.performance_score.den());
        weights.push_back(w);
        weight_sum = detail::checked_add_u128(weight_sum, w);
    }
    if (weight_sum == 0)
        throw std::invalid_argument("all project scores are zero");

    std::vector<std::pair<std::string, TokenAmount>> allocations;
    allocations.reserve(projects.size());
    for (size_t i = 0; i < projects.size(); ++i) {
        TokenAmount a = budget.mul_div(weights[i], weight_sum);
        allocations.emplace_back(projects[i].id, a);
        fund_ -= a;
        funded_projects_[projects[i].id] += a;
    }
    return allocations;
}

void TreasuryState::collect_project_fees(const std::string& project,
                                         TokenAmount amount)
{
    if (!funded_projects_.contains(project))
        throw std::invalid_argument("unknown project: " + project);
    fund_ += amount;
}

TokenAmount TreasuryState::redeem(NodeId node, ShareCount shares)
{
    auto it = share_ledger_.find(node);
    if (it == share_ledger_.end() || it->second < shares)
        throw std::invalid_argument("insufficient pool shares");
    if (shares == 0)
        return TokenAmount{};

    TokenAmount payout = fund_.mul_div(shares, total_shares_);
    fund_ -= payout;
    total_shares_ -= shares;
    it->second -= shares;
    if (it->second == 0)
        share_ledger_.erase(it);
    return payout;
}

TreasuryState::ShareCount TreasuryState::shares_of(NodeId node) const
{
    auto it = share_ledger_.find(node);
    return it == share_ledger_.end() ? 0 : it->second;
}

Rational TreasuryState::share_price() const
{
    if (total_shares_ == 0)
        return Rational(1, 1);
    return Rational(fund_.atoms(), total_shares_);
}

TokenAmount TreasuryState::outstanding_allocation(
    const std::string& project) const
{
    auto it = funded_projects_.find(project);
    return it == funded_projects_.end() ? TokenAmount{} : it->second;
}

} // namespace stakesim
