#pragma once

#include "stakesim/amount.hpp"

#include <cstdint>

namespace stakesim {

/// Deterministic xoshiro256** generator seeded via splitmix64. All
/// simulation randomness flows through instances of this class so that
/// a scenario seed fully determines a run; nothing consults ambient
/// entropy. Distinct named streams keep traffic, tips, availability and
/// producer selection independent of one another, which lets two
/// scenarios that differ only in reward scheme see identical traffic.
class Rng {
public:
    explicit Rng(u64 seed, u64 stream = 0);

    u64 next_u64();

    /// Uniform in [0, bound), rejection-sampled, bound > 0.
    u64 uniform_below(u64 bound);
    u128 uniform_below_u128(u128 bound);

    /// Uniform in [0, 1) with 53 random bits.
    double next_double();

    /// Exact Bernoulli with probability num/den (den > 0, num <= den).
    bool bernoulli(u128 num, u128 den);

    /// Poisson-distributed count; Knuth's product method, chunked so
    /// large means do not underflow exp().
    u64 poisson(double mean);

private:
    u64 state_[4];
};

} // namespace stakesim
