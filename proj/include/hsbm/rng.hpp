#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace hsbm {

// splitmix64 finalizer; used both for seeding and for deriving substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic seed derivation: fold every path element into the base seed.
// Used for per-purpose substreams and per-trial seeds, e.g.
// derive_seed(base, {cell_i, cell_j, trial}).
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = mix64(base);
    for (std::uint64_t v : path) h = mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
    return h;
}

// Stream tags so that samplers seeded with the same numeric seed do not share
// an underlying random stream.
namespace stream {
inline constexpr std::uint64_t partition = 0x7061727469ULL;
inline constexpr std::uint64_t edge_counts = 0x636f756e7473ULL;
inline constexpr std::uint64_t edges_in = 0x65645f696eULL;
inline constexpr std::uint64_t edges_cross = 0x65645f6372ULL;
inline constexpr std::uint64_t local_search = 0x6c6f63736368ULL;
inline constexpr std::uint64_t trial_sigma = 0x7472695f7367ULL;
inline constexpr std::uint64_t trial_graph = 0x7472695f6772ULL;
inline constexpr std::uint64_t trial_estimator = 0x7472695f6573ULL;
} // namespace stream

// xoshiro256++ with splitmix64 state expansion. Deterministic for a fixed
// seed within a build; cross-platform bit-exactness is not a goal.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) {
            sm += 0x9e3779b97f4a7c15ULL;
            word = mix64(sm);
        }
        if (s_[0] == 0 && s_[1] == 0 && s_[2] == 0 && s_[3] == 0) s_[0] = 1;
    }

    Rng(std::uint64_t seed, std::uint64_t stream_tag) : Rng(derive_seed(seed, {stream_tag})) {}

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Unbiased uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t reject = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= reject) return r % bound;
        }
    }

    bool bernoulli(double p) { return next_double() < p; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> s_;
};

} // namespace hsbm
