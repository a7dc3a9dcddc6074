#pragma once

#include <cstdint>
#include <random>

namespace mldeg {

// Seeded generator with platform-independent draws (std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    // Uniform integer in [lo, hi] \ {0}.
    std::int64_t nonzero(std::int64_t lo, std::int64_t hi)
    {
        std::int64_t v;
        do {
            v = uniform(lo, hi);
        } while (v == 0);
        return v;
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// SplitMix64 finalizer; derives independent child seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace mldeg
