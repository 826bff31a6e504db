#pragma once

#include <cstdint>
#include <random>

namespace roommates {

/// Project-wide random engine. mt19937_64 is seedable, has period
/// 2^19937-1, and its output sequence is fully specified by the C++
/// standard, so results are reproducible bit-for-bit across builds.
using Engine = std::mt19937_64;

/// SplitMix64 finalizer; bijective avalanche mixing on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

/// Odd increment of the SplitMix64 stream; multiplication by an odd
/// constant is invertible mod 2^64.
inline constexpr std::uint64_t kSeedGamma = 0x9E3779B97F4A7C15ull;

/// Uniform draw from {0, ..., bound-1} with bias-free range reduction:
/// raw 64-bit words falling in the overflow region 2^64 mod bound are
/// rejected so every residue is exactly equally likely.
inline std::uint64_t uniform_below(Engine& g, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = g();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace roommates
