#pragma once

#include <cstdint>

namespace hbf {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256**, seeded through splitmix64. Self-contained so that runs are
// bit-reproducible across compilers and standard libraries (the std::
// distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform integer in [0, bound), bound >= 1. Unbiased via rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool coin(double p) { return unit() < p; }
    int bit() { return static_cast<int>(next_u64() >> 63); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

}  // namespace hbf
