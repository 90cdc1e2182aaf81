#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tpx {

// All randomness goes through MT19937-64 (std::mt19937_64), whose output stream is
// fixed by the C++ standard. The helpers below avoid the std distributions, whose
// algorithms are implementation-defined, so results are reproducible bit-for-bit
// on any standard library.
using Rng = std::mt19937_64;

// Uniform double in [0, 1): the top 53 bits of one engine output, scaled by 2^-53.
inline double unit_interval(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Bernoulli draw consuming exactly one engine output.
inline bool bernoulli(Rng& rng, double probability) {
    return unit_interval(rng) < probability;
}

// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

// Exponential variate with the given rate (events per unit), by inversion.
inline double exponential(Rng& rng, double rate) {
    return -std::log1p(-unit_interval(rng)) / rate;
}

// Derives an independent child seed from a parent seed and a stream index
// (SplitMix64 finaliser over the combined value).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace tpx
