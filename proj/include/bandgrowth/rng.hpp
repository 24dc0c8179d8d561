#pragma once

#include <cstdint>

namespace bandgrowth {

/// splitmix64 generator. Deterministic across platforms and standard
/// library versions, which std::uniform_int_distribution is not; seeded
/// runs must produce byte-identical transcripts.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive. Modulo bias is irrelevant at the
    /// range sizes used here.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    bool coin() { return (next_u64() & 1) != 0; }

private:
    std::uint64_t state_;
};

} // namespace bandgrowth
