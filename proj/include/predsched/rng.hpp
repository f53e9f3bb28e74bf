#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace predsched {

// Experiment results must be reproducible bit-for-bit across platforms, so
// randomness comes from a pinned generator (xoshiro256**, seeded through
// splitmix64) with hand-rolled bounded draws and shuffles. std::shuffle and
// std::uniform_int_distribution are implementation-defined and must not be
// used anywhere results depend on the stream.

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derive an independent child seed from a master seed and up to two tags.
/// Used for per-row substreams in the sweep harness, so results do not
/// depend on worker scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = master;
    s ^= 0x2545f4914f6cdd1dULL + a + (splitmix64_next(s) << 1);
    s ^= 0x9e3779b97f4a7c15ULL + b + (splitmix64_next(s) << 1);
    return splitmix64_next(s);
}

class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
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

    /// Unbiased draw in [0, n), n >= 1. Rejection sampling keeps the
    /// consumed stream identical on every platform.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace predsched
