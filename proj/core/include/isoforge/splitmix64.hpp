#pragma once

#include <cstdint>

namespace isoforge {

// SplitMix64, after Sebastiano Vigna's public-domain reference
// (https://prng.di.unimi.it/splitmix64.c). This is the pinned PRNG for all
// blueprint sampling: any reimplementation in another language must produce
// the same stream for the same seed, and must map draws to ranges with
// uniform_below() below, or generated problems will not be reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw in [0, n) by rejection: draw x until
    // x < 2^64 - (2^64 mod n), then return x mod n. The rejection bound is
    // part of the pinned algorithm, not an implementation detail.
    std::uint64_t uniform_below(std::uint64_t n) {
        // 2^64 mod n, computed without 128-bit arithmetic.
        const std::uint64_t rem = (0ULL - n) % n;
        const bool has_bound = rem != 0;
        for (;;) {
            const std::uint64_t x = (*this)();
            if (!has_bound || x < 0ULL - rem) return x % n;
        }
    }

    // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1ULL;
        return lo + static_cast<std::int64_t>(uniform_below(span));
    }

private:
    std::uint64_t state_;
};

}  // namespace isoforge
