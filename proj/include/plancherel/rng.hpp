#pragma once

// Reproducible RNG streams. Each (master_seed, replica_index) pair derives an
// independent stream through a splitmix64 counter mix; identical pairs replay
// identical draw sequences bit-for-bit.

#include <cstdint>
#include <random>

namespace plancherel {

class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t replica_index);

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t replica_index() const noexcept { return replica_index_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased integer in [0, n), n >= 1, by rejection on the top bits.
    std::uint64_t next_below(std::uint64_t n);

    /// Uniform double in (0, 1], 53-bit resolution. Never returns 0.
    double next_unit();

    /// Standard normal via Box-Muller (two uniforms per draw, no cache).
    double next_normal();

    /// Exact Poisson(mean): CDF inversion for mean <= 30, transformed
    /// rejection (PTRS) above.
    long long next_poisson(double mean);

private:
    std::uint64_t master_seed_;
    std::uint64_t replica_index_;
    std::mt19937_64 engine_;
};

}  // namespace plancherel
