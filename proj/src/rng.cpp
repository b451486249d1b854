#include "stakesim/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace stakesim {

namespace {

u64 splitmix64(u64& x)
{
    x += 0x9e3779b97f4a7c15ULL;
    u64 z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

u64 rotl(u64 x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Rng::Rng(u64 seed, u64 stream)
{
    u64 x = seed ^ (stream * 0xd1b54a32d192ed03ULL);
    for (auto& s : state_)
        s = splitmix64(x);
}

u64 Rng::next_u64()
{
    u64 result = rotl(state_[1] * 5, 7) * 9;
    u64 t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

u64 Rng::uniform_below(u64 bound)
{
    if (bound == 0)
        throw std::invalid_argument("uniform_below(0)");
    u64 threshold = (0 - bound) % bound;
    for (;;) {
        u64 r = next_u64();
        if (r >= threshold)
            return r % bound;
    }
}

u128 Rng::uniform_below_u128(u128 bound)
{
    if (bound == 0)
        throw std::invalid_argument("uniform_below_u128(0)");
    if (bound <= static_cast<u128>(~static_cast<u64>(0)))
        return uniform_below(static_cast<u64>(bound));
    u128 threshold = (0 - bound) % bound;
    for (;;) {
        u128 r = (static_cast<u128>(next_u64()) << 64) | next_u64();
        if (r >= threshold)
            return r % bound;
    }
}

double Rng::next_double()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool Rng::bernoulli(u128 num, u128 den)
{
    if (den == 0 || num > den)
        throw std::invalid_argument("bernoulli probability out of range");
    if (num == den)
        return true;
    if (num == 0)
        return false;
    return uniform_below_u128(den) < num;
}

u64 Rng::poisson(double mean)
{
    if (mean < 0)
        throw std::invalid_argument("negative poisson mean");
    u64 total = 0;
    // exp(-500) is still comfortably inside double range.
    while (mean > 500.0) {
        total += poisson(500.0);
        mean -= 500.0;
    }
    if (mean == 0.0)
        return total;
    double limit = std::exp(-mean);
    double prod = next_double();
    u64 count = 0;
    while (prod > limit) {
        ++count;
        prod *= next_double();
    }
    return total + count;
}

} // namespace stakesim
