#pragma once

#include <cstdint>

namespace grainforge {

// Pinned xorshift64* generator used everywhere reproducible randomness is
// needed (tap generation, toy construction, sampling). Fully specified so
// outputs are stable across platforms and languages.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        // 0 is a fixed point of the state update; remap it to a nonzero constant.
        : x_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        x_ ^= x_ >> 12;
        x_ ^= x_ << 25;
        x_ ^= x_ >> 27;
        return x_ * 2685821657736338717ull;
    }

    // Uniform value in [0, bound) by rejection sampling (no modulo bias).
    std::uint64_t below(std::uint64_t bound) {
        if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
        // Accept only below the largest multiple of bound representable in 64 bits.
        std::uint64_t limit = (~std::uint64_t(0) / bound) * bound;
        for (;;) {
            std::uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }

    int bit() { return int(next() >> 63); }

private:
    std::uint64_t x_;
};

}  // namespace grainforge
