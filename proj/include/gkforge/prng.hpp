#pragma once

#include <cstdint>

namespace gkforge {

// Deterministic splitmix64 stream for seeded property checks.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // small signed integer in [-range, range]
    long small(long range) { return static_cast<long>(below(2 * range + 1)) - range; }
};

} // namespace gkforge
