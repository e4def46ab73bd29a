#pragma once

#include <cstdint>
#include <random>

namespace gaussreg {

// 64-bit seed. Identical seed => identical stream on every platform: the
// engine is std::mt19937_64 (bit-exact per the standard) and the Gaussian
// transform is a fixed Box-Muller over 53-bit uniforms, never the
// implementation-defined std::normal_distribution.
struct RngSeed {
    std::uint64_t value = 0;
};

// SplitMix64 output function. split_seed(s, k) is the k-th output of a
// SplitMix64 generator seeded at s; used everywhere a run seed fans out into
// sub-streams (per-iteration eval seeds, permutation vs frequency shuffle,
// Monte Carlo trials).
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline RngSeed split_seed(RngSeed seed, std::uint64_t stream) {
    return RngSeed{splitmix64_at(seed.value, stream)};
}

// Deterministic uniform/Gaussian source.
class Rng {
public:
    explicit Rng(RngSeed seed) : eng_(seed.value) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in (0, 1]: (x >> 11) + 1 scaled by 2^-53. Never 0, so log() is safe.
    double next_unit_open0() {
        return static_cast<double>((eng_() >> 11) + 1ULL) * 0x1.0p-53;
    }

    // Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // Unbiased integer in [0, bound) by masked rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~0ULL >> __builtin_clzll(bound - 1 | 1);
        for (;;) {
            std::uint64_t v = eng_() & mask;
            if (v < bound) return v;
        }
    }

    // Standard normal via Box-Muller; the cosine and sine branches are
    // consumed in order.
    double next_gaussian();

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace gaussreg
