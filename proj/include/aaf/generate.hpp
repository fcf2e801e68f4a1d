#pragma once

#include <cstdint>
#include <vector>

#include "aaf/af.hpp"

namespace aaf {

// SplitMix64 stream; the sole source of randomness so that a seed reproduces
// the same framework on every platform.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // uniform draw in [0, bound)
    uint64_t below(uint64_t bound) { return next() % bound; }
    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return (next() >> 11) < static_cast<uint64_t>(p * 9007199254740992.0); // p * 2^53
    }
};

// Framework on arguments x1..xn; every ordered pair (xi, xj), self-pairs
// included, becomes an attack independently with probability p. Pairs are
// drawn in row-major order (i outer, j inner) from SplitMix64(seed).
AF random_af(int n, double p, uint64_t seed);

// Every framework on arguments x1..xn, one per attack subset, in mask order:
// bit i*n+j of the mask (zero-based, LSB first) is the attack (x{i+1}, x{j+1}).
// Guarded to n <= 3; n = 4 (65536 frameworks) needs the explicit override.
std::vector<AF> enumerate_all_afs(int n, bool allow_large = false);

} // namespace aaf
