#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace beings {

// Draws are hand-rolled on top of mt19937_64 instead of <random>
// distributions so that sequences are identical across standard libraries.

inline double uniform01(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;  // [0, 1) with 53 random bits
}

inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Uniform on (0, hi]: complements a [0,1) draw so zero is excluded.
inline double uniform_open0(std::mt19937_64& rng, double hi) {
    return hi * (1.0 - uniform01(rng));
}

inline int uniform_int(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

// Box-Muller; one of the pair is discarded to keep the draw count per call fixed.
inline double normal(std::mt19937_64& rng) {
    const double u1 = 1.0 - uniform01(rng);  // (0, 1]
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// splitmix64, used to derive independent per-trial streams from a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace beings
