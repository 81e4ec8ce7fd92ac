#pragma once

#include <cstdint>
#include <random>

namespace aitv {

// Deterministic helpers on top of mt19937_64. The standard distributions are
// implementation-defined, so uniform draws and bounded integers are derived
// from raw engine output to keep seeded runs byte-identical across toolchains.

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased draw from {0, ..., n-1} by rejection.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Distinct deterministic seeds for independent concerns (noise, init, ...)
// derived from one user-facing seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base ^ splitmix64(stream + 1));
}

} // namespace aitv
