#pragma once

#include <cstdint>

namespace dsc {

/// Counter-based deterministic generator.  Draw i from seed s is
///     mix(s + (i+1) * 0x9E3779B97F4A7C15)
/// with mix the SplitMix64 finalizer:
///     z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///     z ^= z >> 27; z *= 0x94D049BB133111EB;
///     z ^= z >> 31.
/// Doubles are (draw >> 11) * 2^-53 in [0,1); bounded ints use the
/// high 64 bits of draw * n.  The stream depends only on (seed, counter),
/// so trials can be reproduced from the numbers written to reports.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0)
        : seed_(seed), counter_(counter) {}

    static std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() { return at(seed_, counter_++); }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, n); n = 0 returns 0.
    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) return 0;
        unsigned __int128 wide = static_cast<unsigned __int128>(next_u64()) * n;
        return static_cast<std::uint64_t>(wide >> 64);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace dsc
