#include "stakesim/ledger.hpp"

#include <stdexcept>

namespace stakesim {

NodeId LedgerState::register_node(TokenAmount stake, Role role, u32 lock_years,
                                  u64 joined_at, Rational availability)
{
    if (stake < min_stake_)
        throw std::invalid_argument("stake below the minimum collateral");
    if (lock_years < 1)
        throw std::invalid_argument("lock duration must be at least one year");
    if (Rational(1, 1) < availability)
        throw std::invalid_argument("availability must be in [0, 1]");
    if (role == Role::Validator && validator_count_ >= max_validators_)
        throw std::invalid_argument("validator set is full");

    Masternode n;
    n.id = static_cast<NodeId>(nodes_.size() + 1);
    n.role = role;
    n.stake = stake;
    n.lock_years = lock_years;
    n.joined_at = joined_at;
    n.availability = availability;
    nodes_.push_back(n);
    if (role == Role::Validator)
        ++validator_count_;
    total_staked_ += stake;
    return n.id;
}

void LedgerState::slash(NodeId id, TokenAmount amount)
{
    Masternode& n = nodes_.at(id - 1);
    TokenAmount cut = amount < n.stake ? amount : n.stake;
    n.stake -= cut;
    total_staked_ -= cut;
}

const Masternode& LedgerState::node(NodeId id) const
{
    return nodes_.at(id - 1);
}

TokenAmount LedgerState::take_epoch_dust()
{
    TokenAmount d = epoch_dust_;
    epoch_dust_ = TokenAmount{};
    return d;
}

u32 loyalty_factor(u32 lock_years)
{
    if (lock_years == 0)
        throw std::invalid_argument("zero staking duration");
    return lock_years < 10 ? lock_years : 10;
}

LoyaltyAllocation distribute_loyalty_pool(TokenAmount pool,
                                          std::span<const Masternode> nodes)
{
    if (nodes.empty())
        throw std::invalid_argument("no nodes to distribute to");
    u128 factor_sum = 0;
    for (const auto& n : nodes)
        factor_sum += loyalty_factor(n.lock_years);

    LoyaltyAllocation out;
    TokenAmount distributed;
    out.allocations.reserve(nodes.size());
    for (const auto& n : nodes) {
        TokenAmount share =
            pool.mul_div(loyalty_factor(n.lock_years), factor_sum);
        out.allocations.emplace_back(n.id, share);
        distributed += share;
    }
    out.dust = pool - distributed;
    return out;
}

namespace {

std::vector<NodeId> validators_of(const LedgerState& ledger)
{
    std::vector<NodeId> ids;
    for (const auto& n : ledger.nodes())
        if (n.role == Role::Validator)
            ids.push_back(n.id);
    return ids;
}

bool is_available(const std::vector<bool>& available, NodeId id)
{
    return id >= 1 && id <= available.size() && available[id - 1];
}

} // namespace

ProducerPick select_producer(const LedgerState& ledger, u64 height,
                             ProducerPolicy policy, Rng& rng,
                             const std::vector<bool>& available)
{
    std::vector<NodeId> validators = validators_of(ledger);
    ProducerPick pick;

    if (!validators.empty()) {
        if (policy == ProducerPolicy::RoundRobin) {
            size_t start = static_cast<size_t>(height % validators.size());
            for (size_t i = 0; i < validators.size(); ++i) {
                NodeId id = validators[(start + i) % validators.size()];
                if (is_available(available, id)) {
                    pick.producer = id;
                    return pick;
                }
            }
        } else {
            u128 total = 0;
            for (NodeId id : validators)
                if (is_available(available, id))
                    total += ledger.node(id).stake.atoms();
            if (total > 0) {
                u128 ticket = rng.uniform_below_u128(total);
                for (NodeId id : validators) {
                    if (!is_available(available, id))
                        continue;
                    u128 w = ledger.node(id).stake.atoms();
                    if (ticket < w) {
                        pick.producer = id;
                        return pick;
                    }
                    ticket -= w;
                }
            }
        }
    }

    // No validator can produce: temporarily activate a standby.
    for (const auto& n : ledger.nodes()) {
        if (n.role == Role::Standby && is_available(available, n.id)) {
            pick.producer = n.id;
            pick.standby_promoted = true;
            return pick;
        }
    }
    return pick;
}

std::optional<NodeId> promote_standby(const LedgerState& ledger, NodeId failed,
                                      const std::vector<bool>& available)
{
    if (ledger.node(failed).role != Role::Validator)
        throw std::invalid_argument("promotion requires a failed validator");
    for (const auto& n : ledger.nodes())
        if (n.role == Role::Standby && is_available(available, n.id))
            return n.id;
    return std::nullopt;
}

} // namespace stakesim
