#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace exmoves {

// All randomness in the toolkit flows through these helpers. std::mt19937_64
// has a standardized output sequence, and the scalings below are written out
// explicitly, so seeded runs reproduce bit-identically across platforms.
// (Never use std::uniform_*_distribution here: its mapping is
// implementation-defined.)

using Rng = std::mt19937_64;

// Uniform integer in [0, n), n >= 1. Rejection sampling keeps it unbiased.
inline std::uint64_t rng_index(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline int rng_int(Rng& rng, int lo, int hi_inclusive) {
    return lo + static_cast<int>(rng_index(rng, static_cast<std::uint64_t>(hi_inclusive - lo) + 1));
}

// Uniform double in [0, 1) with 53 random bits.
inline double rng_real(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double rng_range(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * rng_real(rng);
}

// FNV-1a; stable across platforms, unlike std::hash.
inline std::uint64_t stable_hash(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Derives an independent stream for a named work item (per-exemplar training,
// per-video generation) so results do not depend on scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view item) {
    std::uint64_t h = stable_hash(item);
    // splitmix64 finalizer over the combined value
    std::uint64_t z = master ^ (h + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace exmoves
