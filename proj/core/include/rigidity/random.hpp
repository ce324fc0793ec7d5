#pragma once

#include <cstdint>
#include <random>

namespace rigidity {

// mt19937_64 with explicit bit-to-double conversion so streams are
// identical across standard libraries (std::uniform_real_distribution is
// not pinned down by the standard).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [lo, hi] via 128-bit multiply (no modulo bias worth
    // caring about at these ranges, and fully deterministic).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const unsigned __int128 wide = static_cast<unsigned __int128>(engine_()) * range;
        return lo + static_cast<std::int64_t>(wide >> 64);
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// splitmix64 step; used to derive independent per-restart seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace rigidity
