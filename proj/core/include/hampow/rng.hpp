#pragma once

#include <cstdint>

namespace hampow {

/// splitmix64 mixing step. Used both as a seed expander and to derive
/// independent per-trial seeds; the output stream is fixed by this file,
/// not by the standard library, so results are identical across platforms.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Per-trial seed from (master seed, grid index, trial index). Any execution
/// order of trials reproduces the same graphs.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t grid_index,
                                 std::uint64_t trial_index) {
    std::uint64_t s = master;
    s ^= splitmix64(grid_index) + 0x9E3779B97F4A7C15ULL;
    std::uint64_t t = splitmix64(s);
    t ^= splitmix64(trial_index) + 0xBF58476D1CE4E5B9ULL;
    return splitmix64(t);
}

/// xoshiro256** seeded via splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) w = splitmix64(s);
    }

    std::uint64_t next() {
        std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0,1) with 53 significant bits.
    double u01() { return double(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_[4];

    static std::uint64_t rotl(std::uint64_t x, int s) {
        return (x << s) | (x >> (64 - s));
    }
};

}  // namespace hampow
