#include "stakesim/fee_market.hpp"

#include "stakesim/rng.hpp"

#include <doctest.h>

using namespace stakesim;

namespace {

FeeMarketState make_state(u128 base_atoms, u64 target)
{
    FeeMarketState s;
    s.base_fee = TokenAmount::from_atoms(base_atoms);
    s.gas_target = target;
    s.gas_limit = 2 * target;
    s.tier_table = FeeTierTable::standard();
    return s;
}

} // namespace

TEST_CASE("base fee moves by at most 12.5% per block")
{
    FeeMarketState s = make_state(8'000'000'000, 15'000'000);

    SUBCASE("exactly at target: unchanged")
    {
        CHECK(next_base_fee(s, s.gas_target) == s.base_fee);
    }
    SUBCASE("full block: exactly +12.5%")
    {
        CHECK(next_base_fee(s, 2 * s.gas_target) ==
              TokenAmount::from_atoms(9'000'000'000));
    }
    SUBCASE("empty block: exactly -12.5%")
    {
        CHECK(next_base_fee(s, 0) == TokenAmount::from_atoms(7'000'000'000));
    }
    SUBCASE("half-surplus block: +6.25%")
    {
        CHECK(next_base_fee(s, s.gas_target + s.gas_target / 2) ==
              TokenAmount::from_atoms(8'500'000'000));
    }
    SUBCASE("over the limit is rejected")
    {
        CHECK_THROWS_AS(next_base_fee(s, 2 * s.gas_target + 1),
                        std::invalid_argument);
    }
    SUBCASE("floors at one atom and can recover")
    {
        FeeMarketState tiny = make_state(1, 1'000);
        CHECK(next_base_fee(tiny, 0) == TokenAmount::from_atoms(1));
        CHECK(next_base_fee(tiny, 2'000) >= TokenAmount::from_atoms(1));
    }
}

TEST_CASE("base fee step never exceeds 12.5% for random fills")
{
    FeeMarketState s = make_state(123'456'789'123, 10'000'000);
    Rng rng(99);
    for (int i = 0; i < 2'000; ++i) {
        u64 used = rng.uniform_below(s.gas_limit + 1);
        TokenAmount next = next_base_fee(s, used);
        u128 base = s.base_fee.atoms();
        u128 diff = next.atoms() > base ? next.atoms() - base
                                        : base - next.atoms();
        CHECK(diff * 8 <= base); // |delta| <= base/8 exactly
        s.base_fee = next;
        if (s.base_fee.atoms() < 1'000)
            s.base_fee = TokenAmount::from_atoms(123'456'789'123);
    }
}

TEST_CASE("n full blocks compound to (9/8)^n within 1 atom per step")
{
    // A base divisible by 8^20 floors nothing: twenty always-full
    // blocks land on exactly base0 * (9/8)^20, twenty empty ones on
    // exactly base0 * (7/8)^20.
    u128 pow8 = 1, pow9 = 1, pow7 = 1;
    for (int i = 0; i < 20; ++i) {
        pow8 *= 8;
        pow9 *= 9;
        pow7 *= 7;
    }
    FeeMarketState s = make_state(pow8, 15'000'000);
    for (int step = 0; step < 20; ++step)
        s.base_fee = next_base_fee(s, 2 * s.gas_target);
    CHECK(s.base_fee.atoms() == pow9);

    s = make_state(pow8, 15'000'000);
    for (int step = 0; step < 20; ++step)
        s.base_fee = next_base_fee(s, 0);
    CHECK(s.base_fee.atoms() == pow7);

    // A generic base floors each step, losing under 1 atom per step
    // against the one-step rational.
    s = make_state(10'000'000'007, 15'000'000);
    for (int step = 0; step < 20; ++step) {
        u128 prev = s.base_fee.atoms();
        s.base_fee = next_base_fee(s, 2 * s.gas_target);
        u128 got = s.base_fee.atoms();
        CHECK(got == prev * 9 / 8); // floor of the exact step
        CHECK(prev * 9 - got * 8 < 8); // within 1 atom of prev*9/8
    }
    s = make_state(10'000'000'007, 15'000'000);
    for (int step = 0; step < 20; ++step) {
        u128 prev = s.base_fee.atoms();
        s.base_fee = next_base_fee(s, 0);
        u128 got = s.base_fee.atoms();
        // prev - floor(prev/8) = ceil(prev*7/8): within 1 atom above.
        CHECK(got * 8 >= prev * 7);
        CHECK(got * 8 - prev * 7 < 8);
    }
}

TEST_CASE("fee multiplier follows the tier table")
{
    FeeTierTable t = FeeTierTable::standard();
    CHECK(fee_multiplier(Rational(3, 1), t) == 1);
    CHECK(fee_multiplier(Rational(7, 1), t) == 10);
    CHECK(fee_multiplier(Rational(18, 1), t) == 20);
    CHECK(fee_multiplier(Rational(30, 1), t) == 50);
    CHECK(fee_multiplier(Rational(60, 1), t) == 100);
    CHECK(fee_multiplier(Rational(150, 1), t) == 100); // top tier holds
    CHECK(fee_multiplier(Rational(0, 1), t) == 1);     // below first bound
    CHECK(fee_multiplier(Rational(1, 2), t) == 1);

    // Boundaries are lower-inclusive.
    CHECK(fee_multiplier(Rational(5, 1), t) == 10);
    CHECK(fee_multiplier(Rational(12, 1), t) == 20);

    SUBCASE("monotone non-decreasing over random ratios")
    {
        Rng rng(5);
        for (int i = 0; i < 1'000; ++i) {
            u64 a = rng.uniform_below(2'000);
            u64 b = rng.uniform_below(2'000);
            if (a > b)
                std::swap(a, b);
            CHECK(fee_multiplier(Rational(a, 7), t) <=
                  fee_multiplier(Rational(b, 7), t));
        }
    }
    SUBCASE("malformed tables are rejected")
    {
        FeeTierTable bad = t;
        bad.tiers[1].multiplier = 0; // decreasing
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    }
}

TEST_CASE("tip mechanism activates at 100x the reference rate")
{
    FeeTierTable t = FeeTierTable::standard();
    CHECK_FALSE(tip_active(Rational(99, 1), t));
    CHECK(tip_active(Rational(100, 1), t));
    CHECK(tip_active(Rational(250, 1), t));
    CHECK_FALSE(tip_active(Rational(0, 1), t));
}

TEST_CASE("tip ordering is a stable descending sort")
{
    auto tx = [](u64 id, u128 tip) {
        Transaction t;
        t.id = id;
        t.gas_used = 21'000;
        t.tip = TokenAmount::from_atoms(tip);
        t.submitted_at = id;
        return t;
    };

    auto sorted = order_by_tip({tx(1, 1), tx(2, 5), tx(3, 3)});
    REQUIRE(sorted.size() == 3);
    CHECK(sorted[0].id == 2);
    CHECK(sorted[1].id == 3);
    CHECK(sorted[2].id == 1);

    auto equal_tips = order_by_tip({tx(1, 4), tx(2, 4), tx(3, 4)});
    CHECK(equal_tips[0].id == 1);
    CHECK(equal_tips[1].id == 2);
    CHECK(equal_tips[2].id == 3);

    CHECK(order_by_tip({}).empty());

    SUBCASE("always a permutation of the input")
    {
        Rng rng(17);
        std::vector<Transaction> txs;
        for (u64 i = 1; i <= 50; ++i)
            txs.push_back(tx(i, rng.uniform_below(5)));
        auto out = order_by_tip(txs);
        REQUIRE(out.size() == txs.size());
        u64 id_sum = 0, tip_sum = 0;
        for (const auto& t : out) {
            id_sum += t.id;
            tip_sum += static_cast<u64>(t.tip.atoms());
            CHECK(t.id >= 1);
            CHECK(t.id <= 50);
        }
        CHECK(id_sum == 50 * 51 / 2);
        u64 in_tips = 0;
        for (const auto& t : txs)
            in_tips += static_cast<u64>(t.tip.atoms());
        CHECK(tip_sum == in_tips);
        for (size_t i = 1; i < out.size(); ++i) {
            CHECK(out[i].tip <= out[i - 1].tip);
            if (out[i].tip == out[i - 1].tip)
                CHECK(out[i - 1].id < out[i].id); // stability
        }
    }
}

TEST_CASE("split_fee conserves the sender's charge")
{
    Transaction tx;
    tx.gas_used = 10;
    tx.tip = TokenAmount::from_atoms(5);

    FeeSplit split = split_fee(tx, TokenAmount::from_atoms(2), 1);
    CHECK(split.burned == TokenAmount::from_atoms(20));
    CHECK(split.to_validator == TokenAmount::from_atoms(5));
    CHECK(split.total() == TokenAmount::from_atoms(25));

    SUBCASE("zero tip means zero validator share")
    {
        tx.tip = TokenAmount{};
        CHECK(split_fee(tx, TokenAmount::from_atoms(2), 1)
                  .to_validator.is_zero());
    }
    SUBCASE("the multiplier scales only the base component")
    {
        FeeSplit x10 = split_fee(tx, TokenAmount::from_atoms(2), 10);
        CHECK(x10.burned == TokenAmount::from_atoms(200));
        CHECK(x10.to_validator == tx.tip);
    }
    SUBCASE("conservation over random inputs")
    {
        Rng rng(23);
        for (int i = 0; i < 1'000; ++i) {
            Transaction r;
            r.gas_used = 1 + rng.uniform_below(100'000);
            r.tip = TokenAmount::from_atoms(rng.uniform_below(1'000'000));
            TokenAmount base =
                TokenAmount::from_atoms(1 + rng.uniform_below(1'000'000));
            u64 mult = 1 + rng.uniform_below(100);
            FeeSplit got = split_fee(r, base, mult);
            CHECK(got.burned + got.to_validator == got.total());
            CHECK(got.burned == base.mul(mult).mul(r.gas_used));
        }
    }
    SUBCASE("zero-gas transactions are invalid")
    {
        tx.gas_used = 0;
        CHECK_THROWS_AS(split_fee(tx, TokenAmount::from_atoms(1), 1),
                        std::invalid_argument);
    }
}
