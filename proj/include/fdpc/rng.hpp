#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace fdpc {

/// SplitMix64 (Steele/Lea/Flood), 64-bit state. Used both as the stream
/// generator and to derive independent substream seeds; output sequences are
/// fixed for all time so that recorded seeds replay bit-identically.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via the polar (Marsaglia) method; pairs are cached.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_double() - 1.0;
            v = 2.0 * next_double() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Mixes (seed, a, b) into one well-spread 64-bit substream seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    SplitMix64 g(seed ^ (a * 0xd1342543de82ef95ull) ^ (b * 0x2545f4914f6cdd1dull));
    g.next_u64();
    return g.next_u64();
}

/// Per-trial channel randomness: (master seed, trial) fully determine the
/// sample stream, so trials can be generated independently and in parallel.
struct ChannelRng {
    std::uint64_t masterSeed = 0;
    std::uint64_t trial = 0;

    SplitMix64 stream(std::uint64_t purpose = 0) const {
        return SplitMix64(derive_seed(masterSeed, trial, purpose));
    }
};

/// Seeded Fisher-Yates permutation of {0, ..., n-1}.
std::vector<std::uint32_t> random_permutation(std::uint32_t n, std::uint64_t seed);

}  // namespace fdpc
