#pragma once

#include "stakesim/amount.hpp"
#include "stakesim/rational.hpp"
#include "stakesim/rng.hpp"

#include <optional>
#include <span>
#include <vector>

namespace stakesim {

enum class Role { Validator, Standby };

using NodeId = u32; // 1-based, assigned at registration

struct Masternode {
    NodeId id = 0;
    Role role = Role::Standby;
    TokenAmount stake;
    u32 lock_years = 1;
    u64 joined_at = 0;
    Rational availability = Rational(1, 1); // per-block probability
};

enum class ProducerPolicy { RoundRobin, StakeLottery };

/// Node registry with exact stake accounting. total_staked always
/// equals the sum of node stakes; the validator set is capped.
class LedgerState {
public:
    LedgerState(TokenAmount min_stake, u64 max_validators)
        : min_stake_(min_stake), max_validators_(max_validators)
    {
    }
    static LedgerState with_defaults()
    {
        return LedgerState(TokenAmount::from_tokens(10'000'000), 108);
    }

    NodeId register_node(TokenAmount stake, Role role, u32 lock_years,
                         u64 joined_at,
                         Rational availability = Rational(1, 1));

    /// Reduces a node's stake (clamped at zero) and total_staked with it.
    void slash(NodeId id, TokenAmount amount);

    const Masternode& node(NodeId id) const;
    std::span<const Masternode> nodes() const { return nodes_; }
    size_t size() const { return nodes_.size(); }
    u64 validator_count() const { return validator_count_; }
    TokenAmount total_staked() const { return total_staked_; }
    TokenAmount min_stake() const { return min_stake_; }
    u64 max_validators() const { return max_validators_; }

    TokenAmount epoch_dust() const { return epoch_dust_; }
    void add_epoch_dust(TokenAmount d) { epoch_dust_ += d; }
    TokenAmount take_epoch_dust();

private:
    TokenAmount min_stake_;
    u64 max_validators_;
    std::vector<Masternode> nodes_;
    u64 validator_count_ = 0;
    TokenAmount total_staked_;
    TokenAmount epoch_dust_; // undistributed rounding remainder
};

/// Loyalty factor earned for locking stake: one per locked year,
/// capped at 10.
u32 loyalty_factor(u32 lock_years);

struct LoyaltyAllocation {
    std::vector<std::pair<NodeId, TokenAmount>> allocations;
    TokenAmount dust; // pool - sum(allocations), carried forward
};

/// Splits a reward pool across nodes proportionally to their loyalty
/// factors: allocation_i = floor(pool * L_i / sum(L)). The remainder is
/// returned as dust so the caller can carry it into the next epoch.
LoyaltyAllocation distribute_loyalty_pool(TokenAmount pool,
                                          std::span<const Masternode> nodes);

struct ProducerPick {
    std::optional<NodeId> producer;
    bool standby_promoted = false;
};

/// Chooses this block's producer among available validators
/// (RoundRobin scans from height mod validator-count, skipping
/// unavailable nodes; StakeLottery weights by stake). When no validator
/// is available the first available standby is temporarily activated.
ProducerPick select_producer(const LedgerState& ledger, u64 height,
                             ProducerPolicy policy, Rng& rng,
                             const std::vector<bool>& available);

/// First available standby in registration order, or nullopt. `failed`
/// must name a validator; roles are not changed by promotion.
std::optional<NodeId> promote_standby(const LedgerState& ledger, NodeId failed,
                                      const std::vector<bool>& available);

} // namespace stakesim
