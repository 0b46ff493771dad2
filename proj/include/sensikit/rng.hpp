#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sensikit {

// Deterministic random helpers. std::mt19937_64 output is pinned by the
// standard, but the std:: distributions are not, so the draws below are
// written out explicitly to keep designs bit-identical across platforms.

// SplitMix64 finalizer; used to derive independent stream seeds from
// (seed, index) pairs, e.g. one stream per bootstrap replicate.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform integer in [0, bound) by rejection from the top 2^64 range.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

// Uniform double in [0, 1) with 53-bit resolution.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void shuffle(std::mt19937_64& rng, std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace sensikit
