#ifndef BMW_RANDOM_HPP
#define BMW_RANDOM_HPP

// Reproducible uniform generation: xoshiro256** (Blackman & Vigna, public
// domain reference implementation) seeded through SplitMix64. Pure integer
// arithmetic, so identical SeedSpec values give identical sequences on every
// platform.

#include <cstdint>

namespace bmw {

/// Seed plus stream index. Distinct streams give statistically independent
/// sequences; identical specs give identical sequences.
struct SeedSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t s) : state_(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(SeedSpec spec) {
        SplitMix64 base(spec.seed);
        SplitMix64 mix(spec.stream * 0x9E3779B97F4A7C15ULL ^ 0x6A09E667F3BCC909ULL);
        bool all_zero = true;
        for (auto& w : state_) {
            w = base.next() ^ mix.next();
            all_zero = all_zero && w == 0;
        }
        if (all_zero)
            state_[0] = 1;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0,1) with 53 random bits; consumes exactly one
    /// generator word.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

} // namespace bmw

#endif
