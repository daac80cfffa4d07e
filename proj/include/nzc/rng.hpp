#pragma once

#include <cstdint>

namespace nzc {

// Fixed 64-bit linear congruential generator (Knuth MMIX constants).
// Every randomized suite draws through this so that witnesses reproduce
// bit-for-bit across runs and platforms; the draw for a bounded value is
// (state >> 33) % bound after one step.
struct Lcg {
    std::uint64_t state;

    explicit Lcg(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }

    int below(int bound) { return static_cast<int>((next() >> 33) % static_cast<std::uint64_t>(bound)); }
};

} // namespace nzc
