#pragma once

#include <cstdint>
#include <random>

namespace imsep {

// All randomized code takes an explicit Rng so runs are reproducible from a
// single seed. Helpers below avoid std::uniform_*_distribution, whose output
// is not pinned down by the standard across implementations.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform integer in [0, bound) via rejection sampling. bound must be > 0.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t bound) {
    // Largest multiple of bound that fits; values above it would bias the
    // low residues.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

inline int rng_int(Rng& rng, int lo, int hi_inclusive) {
    return lo + static_cast<int>(rng_below(
                    rng, static_cast<std::uint64_t>(hi_inclusive - lo) + 1));
}

// Uniform double in [0, 1) with 53 random bits.
inline double rng_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace imsep
