#include "stakesim/escrow.hpp"

#include "stakesim/rng.hpp"

#include <doctest.h>

using namespace stakesim;

namespace {
// Age unit of one block keeps the arithmetic transparent: the table's
// zero_fee_age is 365 "days" and one day is one block.
const u64 kUnit = 1;
WithdrawalFeeTable table_days() { return WithdrawalFeeTable::standard(365); }
} // namespace

TEST_CASE("accrual logs deposits")
{
    EscrowAccount acct;
    acct.accrue(TokenAmount::from_tokens(100), 1);
    CHECK(acct.balance() == TokenAmount::from_tokens(100));

    acct = EscrowAccount{};
    acct.accrue(TokenAmount::from_tokens(50), 1);
    acct.accrue(TokenAmount::from_tokens(70), 2);
    CHECK(acct.balance() == TokenAmount::from_tokens(120));
    CHECK(acct.deposits().size() == 2);

    CHECK_THROWS_AS(acct.accrue(TokenAmount{}, 3), std::invalid_argument);
}

TEST_CASE("withdrawal fee table matches the standard table")
{
    auto t = table_days();
    const Rational age0(0, 1);
    const Rational one_year(365, 1);
    CHECK(withdrawal_fee(TokenAmount::from_tokens(1'000), age0, t) ==
          percent(50));
    CHECK(withdrawal_fee(TokenAmount::from_tokens(10'000), age0, t) ==
          percent(30));
    CHECK(withdrawal_fee(TokenAmount::from_tokens(100'000), age0, t) ==
          percent(20));
    CHECK(withdrawal_fee(TokenAmount::from_tokens(1'000'000), one_year, t) ==
          percent(0));

    SUBCASE("linear decay: half a year halves the rate")
    {
        Rational half_year(365, 2);
        CHECK(withdrawal_fee(TokenAmount::from_tokens(1'000), half_year, t) ==
              percent(25));
    }
    SUBCASE("step mode keeps the full rate until the horizon")
    {
        auto step = t;
        step.decay = FeeDecayMode::StepAtThreshold;
        CHECK(withdrawal_fee(TokenAmount::from_tokens(1'000),
                             Rational(364, 1), step) == percent(50));
        CHECK(withdrawal_fee(TokenAmount::from_tokens(1'000),
                             Rational(365, 1), step) == percent(0));
    }
    SUBCASE("non-increasing in amount and in age")
    {
        Rational prev(1, 1);
        for (u64 amount : {1'000, 5'000, 10'000, 50'000, 100'000, 1'000'000}) {
            Rational rate =
                withdrawal_fee(TokenAmount::from_tokens(amount), age0, t);
            CHECK(!(prev < rate));
            prev = rate;
        }
        prev = Rational(1, 1);
        for (u64 d = 0; d <= 400; d += 40) {
            Rational rate = withdrawal_fee(TokenAmount::from_tokens(1'000),
                                           Rational(d, 1), t);
            CHECK(!(prev < rate));
            prev = rate;
        }
    }
    SUBCASE("below the smallest tier is not withdrawable")
    {
        CHECK_THROWS_AS(
            withdrawal_fee(TokenAmount::from_tokens(999), age0, t),
            std::invalid_argument);
    }
}

TEST_CASE("withdraw pays out net of the burned fee")
{
    auto t = table_days();

    SUBCASE("age-zero 1,000 pays 50%")
    {
        EscrowAccount acct;
        acct.accrue(TokenAmount::from_tokens(2'000), 100);
        auto res =
            acct.withdraw(TokenAmount::from_tokens(1'000), 100, t, kUnit);
        CHECK(res.payout == TokenAmount::from_tokens(500));
        CHECK(res.burned == TokenAmount::from_tokens(500));
        CHECK(acct.balance() == TokenAmount::from_tokens(1'000));
    }
    SUBCASE("a million after a year is free")
    {
        EscrowAccount acct;
        acct.accrue(TokenAmount::from_tokens(1'000'000), 0);
        auto res =
            acct.withdraw(TokenAmount::from_tokens(1'000'000), 365, t, kUnit);
        CHECK(res.payout == TokenAmount::from_tokens(1'000'000));
        CHECK(res.burned.is_zero());
    }
    SUBCASE("below the threshold is rejected")
    {
        EscrowAccount acct;
        acct.accrue(TokenAmount::from_tokens(2'000), 0);
        CHECK_THROWS_AS(
            acct.withdraw(TokenAmount::from_tokens(999), 0, t, kUnit),
            std::invalid_argument);
    }
    SUBCASE("insufficient balance is rejected")
    {
        EscrowAccount acct;
        acct.accrue(TokenAmount::from_tokens(1'500), 0);
        CHECK_THROWS_AS(
            acct.withdraw(TokenAmount::from_tokens(2'000), 0, t, kUnit),
            std::invalid_argument);
    }
    SUBCASE("FIFO aging: oldest deposits unlock first")
    {
        EscrowAccount acct;
        acct.accrue(TokenAmount::from_tokens(1'000), 0);
        acct.accrue(TokenAmount::from_tokens(1'000), 365);
        // Withdraw 1,000 at day 365: consumes the year-old deposit only,
        // so the linear decay zeroes the fee.
        auto res =
            acct.withdraw(TokenAmount::from_tokens(1'000), 365, t, kUnit);
        CHECK(res.burned.is_zero());
        // The next 1,000 is brand new: full 50%.
        auto res2 =
            acct.withdraw(TokenAmount::from_tokens(1'000), 365, t, kUnit);
        CHECK(res2.burned == TokenAmount::from_tokens(500));
    }
    SUBCASE("weighted-average age across deposits")
    {
        EscrowAccount acct;
        acct.accrue(TokenAmount::from_tokens(1'000), 0);
        acct.accrue(TokenAmount::from_tokens(1'000), 365);
        // Withdrawing both at day 365 averages to half a year: 25%.
        auto res =
            acct.withdraw(TokenAmount::from_tokens(2'000), 365, t, kUnit);
        CHECK(res.burned == TokenAmount::from_tokens(500)); // 25% of 2,000
    }
}

TEST_CASE("escrow conserves value over random operation sequences")
{
    auto t = table_days();
    Rng rng(53);
    for (int round = 0; round < 500; ++round) {
        EscrowAccount acct;
        TokenAmount accrued, paid, burned;
        u64 now = 0;
        for (int op = 0; op < 20; ++op) {
            now += rng.uniform_below(200);
            if (acct.balance() < t.threshold || rng.uniform_below(3) != 0) {
                TokenAmount amount = TokenAmount::from_tokens(
                    1 + rng.uniform_below(5'000));
                acct.accrue(amount, now);
                accrued += amount;
            } else {
                u128 span = acct.balance().atoms() - t.threshold.atoms();
                TokenAmount amount =
                    t.threshold + TokenAmount::from_atoms(
                                      span == 0 ? 0
                                                : rng.uniform_below_u128(span));
                auto res = acct.withdraw(amount, now, t, kUnit);
                CHECK(res.payout + res.burned == amount);
                paid += res.payout;
                burned += res.burned;
            }
            CHECK(accrued == acct.balance() + paid + burned);
        }
    }
}
