#pragma once

#include <cstdint>

namespace tilekit {

// Counter-based randomness: every draw is a pure function of (seed, counters).
// Identical seeds reproduce identical fields on any platform, and a window can
// be re-simulated site by site without storing state.

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return mix64(seed ^ mix64(a ^ mix64(b)));
}

/// Uniform double in [0, 1) with 53 random mantissa bits, keyed by
/// (seed, site, fiber).
inline double uniform_unit(std::uint64_t seed, std::int64_t site, std::int64_t fiber = 0) {
    const std::uint64_t h =
        counter_hash(seed, static_cast<std::uint64_t>(site), static_cast<std::uint64_t>(fiber));
    return double(h >> 11) * 0x1.0p-53;
}

} // namespace tilekit
