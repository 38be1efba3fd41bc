#pragma once

#include <cstdint>

namespace circulant {

// SplitMix64 finalizer: a bijective avalanche mix used both as the
// generator's output stage and to key independent per-trial streams.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// SplitMix64: 64-bit counter-based generator (Steele, Lea & Flood).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform draw in [0, bound) by Lemire's debiased multiply-shift.
    std::uint64_t next_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

// Independent stream for one trial: the (seed, trial) pair is hashed through
// two mixing rounds so distinct trials land on well-separated generator
// states instead of shifted copies of one sequence. Deterministic, so trial
// t's walk is identical no matter how trials are distributed over workers.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    const std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL * (trial + 1));
    return SplitMix64(mix64(h ^ 0xd1b54a32d192ed03ULL));
}

} // namespace circulant
