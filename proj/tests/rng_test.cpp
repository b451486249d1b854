#include "stakesim/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace stakesim;

TEST_CASE("identical seeds give identical streams")
{
    Rng a(42, 1), b(42, 1), c(42, 2);
    bool streams_differ = false;
    for (int i = 0; i < 100; ++i) {
        u64 va = a.next_u64();
        CHECK(va == b.next_u64());
        if (va != c.next_u64())
            streams_differ = true;
    }
    CHECK(streams_differ);
}

TEST_CASE("uniform_below stays in range and is roughly uniform")
{
    Rng rng(7);
    u64 counts[10] = {};
    for (int i = 0; i < 100'000; ++i)
        ++counts[rng.uniform_below(10)];
    for (u64 c : counts) {
        // 3-sigma binomial band around 10,000.
        CHECK(c > 10'000 - 3 * 95);
        CHECK(c < 10'000 + 3 * 95);
    }
    u128 big = (u128(1) << 90);
    CHECK(rng.uniform_below_u128(big) < big);
}

TEST_CASE("exact bernoulli matches its probability")
{
    Rng rng(11);
    int hits = 0;
    const int n = 100'000;
    for (int i = 0; i < n; ++i)
        hits += rng.bernoulli(1, 4);
    double sigma = std::sqrt(0.25 * 0.75 * n);
    CHECK(std::abs(hits - n / 4.0) < 3 * sigma);
    CHECK(rng.bernoulli(1, 1));
    CHECK_FALSE(rng.bernoulli(0, 3));
}

TEST_CASE("poisson sample mean matches within 3 sigma")
{
    Rng rng(13);
    const double mean = 20.0;
    const int n = 10'000;
    double sum = 0;
    for (int i = 0; i < n; ++i)
        sum += static_cast<double>(rng.poisson(mean));
    double sample_mean = sum / n;
    double sigma_mean = std::sqrt(mean / n);
    CHECK(std::abs(sample_mean - mean) < 3 * sigma_mean);
    CHECK(rng.poisson(0.0) == 0);

    // Large means go through the chunked path.
    double big_sum = 0;
    for (int i = 0; i < 200; ++i)
        big_sum += static_cast<double>(rng.poisson(2'000.0));
    CHECK(std::abs(big_sum / 200 - 2'000.0) < 3 * std::sqrt(2'000.0 / 200));
}
