#pragma once

#include <cstdint>

namespace cyclecover {

/// xorshift64* generator. State update:
///   s ^= s >> 12;  s ^= s << 25;  s ^= s >> 27;  output = s * 0x2545F4914F6CDD1D
/// Seeds are scrambled through one splitmix64 step so that seed 0 is
/// usable and nearby seeds decorrelate. Fully platform-independent; all
/// campaign reproducibility rests on this generator.
class Xorshift64Star {
public:
    explicit Xorshift64Star(uint64_t seed) : state_(scramble(seed)) {}

    uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform in [0, bound) by rejection, exact and bias-free.
    uint64_t next_below(uint64_t bound) {
        if (bound == 0) return 0;
        uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % bound;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    /// Bernoulli with exact rational probability num/den.
    bool chance(long long num, long long den) {
        if (num <= 0) return false;
        if (num >= den) return true;
        return next_below((uint64_t)den) < (uint64_t)num;
    }

    static uint64_t scramble(uint64_t seed) {
        uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z = z ^ (z >> 31);
        return z == 0 ? 0x9E3779B97F4A7C15ULL : z;
    }

private:
    uint64_t state_;
};

/// Stable derivation of per-trial seeds from a campaign seed.
inline uint64_t derive_seed(uint64_t base, uint64_t index) {
    return Xorshift64Star::scramble(base ^ (0x517CC1B727220A95ULL * (index + 1)));
}

} // namespace cyclecover
