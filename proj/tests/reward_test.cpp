#include "stakesim/reward.hpp"

#include "stakesim/rng.hpp"

#include <doctest.h>

using namespace stakesim;

namespace {
const TokenAmount kStake = TokenAmount::from_tokens(10'000'000);
const Rational kFullYear(1, 1);
}

TEST_CASE("validator earnings per scheme")
{
    auto current = validator_earnings(RewardScheme::current_model(), kStake,
                                      TokenAmount{}, TokenAmount{},
                                      TokenAmount{}, kFullYear);
    CHECK(current.staking_reward == TokenAmount::from_tokens(1'000'000));
    CHECK(current.total == TokenAmount::from_tokens(1'000'000));

    auto flat9 = validator_earnings(RewardScheme::scheme1(), kStake,
                                    TokenAmount{}, TokenAmount{},
                                    TokenAmount{}, kFullYear);
    CHECK(flat9.total == TokenAmount::from_tokens(900'000));

    auto tipped = validator_earnings(RewardScheme::scheme2(), kStake,
                                     TokenAmount{},
                                     TokenAmount::from_tokens(5'000),
                                     TokenAmount{}, kFullYear);
    CHECK(tipped.total == TokenAmount::from_tokens(1'005'000));

    SUBCASE("burning schemes exclude the fee share")
    {
        auto burn = validator_earnings(RewardScheme::scheme2(), kStake,
                                       TokenAmount::from_tokens(777),
                                       TokenAmount{}, TokenAmount{},
                                       kFullYear);
        CHECK(burn.fee_share.is_zero());
        auto dist = validator_earnings(RewardScheme::current_model(), kStake,
                                       TokenAmount::from_tokens(777),
                                       TokenAmount{}, TokenAmount{},
                                       kFullYear);
        CHECK(dist.fee_share == TokenAmount::from_tokens(777));
        CHECK(dist.total == TokenAmount::from_tokens(1'000'777));
    }
    SUBCASE("period fraction bounds")
    {
        CHECK_THROWS_AS(validator_earnings(RewardScheme::current_model(),
                                           kStake, TokenAmount{},
                                           TokenAmount{}, TokenAmount{},
                                           Rational(0, 1)),
                        std::invalid_argument);
        CHECK_THROWS_AS(validator_earnings(RewardScheme::current_model(),
                                           kStake, TokenAmount{},
                                           TokenAmount{}, TokenAmount{},
                                           Rational(3, 2)),
                        std::invalid_argument);
    }
}

TEST_CASE("standby earnings per scheme")
{
    CHECK(standby_earnings(RewardScheme::current_model(), kStake, kFullYear)
              .total == TokenAmount::from_tokens(800'000));
    CHECK(standby_earnings(RewardScheme::scheme1(), kStake, kFullYear).total ==
          TokenAmount::from_tokens(900'000));
    CHECK(standby_earnings(RewardScheme::scheme2(), kStake, Rational(1, 2))
              .total == TokenAmount::from_tokens(400'000));

    auto s = standby_earnings(RewardScheme::current_model(), kStake,
                              kFullYear);
    CHECK(s.fee_share.is_zero());
    CHECK(s.tips.is_zero());
}

TEST_CASE("earnings are linear in period fraction and stake")
{
    for (const auto& scheme :
         {RewardScheme::current_model(), RewardScheme::scheme1(),
          RewardScheme::scheme2(), RewardScheme::eth_style(percent(5))}) {
        auto half = validator_earnings(scheme, kStake, TokenAmount{},
                                       TokenAmount{}, TokenAmount{},
                                       Rational(1, 2));
        auto full = validator_earnings(scheme, kStake, TokenAmount{},
                                       TokenAmount{}, TokenAmount{},
                                       kFullYear);
        CHECK(half.staking_reward.mul(2) == full.staking_reward);

        auto twice_stake = validator_earnings(scheme, kStake.mul(2),
                                              TokenAmount{}, TokenAmount{},
                                              TokenAmount{}, kFullYear);
        CHECK(twice_stake.staking_reward == full.staking_reward.mul(2));
    }
}

TEST_CASE("penalties subtract and overflow into stake slashes")
{
    auto hit = validator_earnings(RewardScheme::current_model(), kStake,
                                  TokenAmount{}, TokenAmount{},
                                  TokenAmount::from_tokens(400'000),
                                  kFullYear);
    CHECK(hit.total == TokenAmount::from_tokens(600'000));
    CHECK(hit.stake_slash.is_zero());

    auto wiped = validator_earnings(RewardScheme::current_model(), kStake,
                                    TokenAmount{}, TokenAmount{},
                                    TokenAmount::from_tokens(1'500'000),
                                    kFullYear);
    CHECK(wiped.total.is_zero());
    CHECK(wiped.stake_slash == TokenAmount::from_tokens(500'000));
}

TEST_CASE("eth-style total rewards identity")
{
    auto r = eth_total_rewards(TokenAmount::from_tokens(5),
                               TokenAmount::from_tokens(2),
                               TokenAmount::from_tokens(1));
    CHECK(r.rewards == TokenAmount::from_tokens(6));
    CHECK(r.stake_slash.is_zero());

    CHECK(eth_total_rewards(TokenAmount::from_tokens(5),
                            TokenAmount::from_tokens(2), TokenAmount{})
              .rewards == TokenAmount::from_tokens(7));

    auto slashed = eth_total_rewards(TokenAmount::from_tokens(1),
                                     TokenAmount{},
                                     TokenAmount::from_tokens(5));
    CHECK(slashed.rewards.is_zero());
    CHECK(slashed.stake_slash == TokenAmount::from_tokens(4));

    SUBCASE("no penalties: rewards = issuance + tips exactly")
    {
        Rng rng(31);
        for (int i = 0; i < 1'000; ++i) {
            TokenAmount a = TokenAmount::from_atoms(rng.next_u64());
            TokenAmount b = TokenAmount::from_atoms(rng.next_u64());
            CHECK(eth_total_rewards(a, b, TokenAmount{}).rewards == a + b);
        }
    }
}

TEST_CASE("net supply growth can go negative")
{
    CHECK(net_supply_growth(TokenAmount::from_tokens(10'000'000), percent(10),
                            TokenAmount::from_tokens(1'000'000))
              .is_zero());
    auto grow = net_supply_growth(TokenAmount::from_tokens(10'000'000),
                                  percent(10), TokenAmount{});
    CHECK_FALSE(grow.negative);
    CHECK(grow.magnitude == TokenAmount::from_tokens(1'000'000));

    auto shrink = net_supply_growth(TokenAmount::from_tokens(10'000'000),
                                    percent(10),
                                    TokenAmount::from_tokens(1'500'000));
    CHECK(shrink.negative);
    CHECK(shrink.magnitude == TokenAmount::from_tokens(500'000));
}
