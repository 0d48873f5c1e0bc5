#include "plancherel/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plancherel {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t replica_index)
    : master_seed_(master_seed), replica_index_(replica_index) {
    // 128-bit mix of (master, replica): two independent splitmix chains keyed
    // by the pair, feeding a seed_seq.
    std::uint64_t s1 = master_seed ^ (0xD1B54A32D192ED03ULL * (replica_index + 1));
    std::uint64_t s2 = replica_index ^ (0x8CB92BA72F3D8DD7ULL * (master_seed | 1));
    std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(s1)),
                      static_cast<std::uint32_t>(splitmix64(s1) >> 32),
                      static_cast<std::uint32_t>(splitmix64(s2)),
                      static_cast<std::uint32_t>(splitmix64(s2) >> 32),
                      static_cast<std::uint32_t>(splitmix64(s1)),
                      static_cast<std::uint32_t>(splitmix64(s2) >> 32)};
    engine_.seed(seq);
}

std::uint64_t RandomStream::next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: n must be positive");
    if ((n & (n - 1)) == 0) return engine_() & (n - 1);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % n;
}

double RandomStream::next_unit() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::next_normal() {
    double u1 = next_unit();
    double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

long long RandomStream::next_poisson(double mean) {
    if (!(mean > 0)) throw std::invalid_argument("next_poisson: mean must be positive");
    if (mean <= 30.0) {
        // CDF inversion
        double p = std::exp(-mean);
        double cdf = p;
        double u = next_unit();
        long long k = 0;
        while (u > cdf) {
            ++k;
            p *= mean / static_cast<double>(k);
            cdf += p;
            if (k > 2000) break;  // u in a sub-1e-300 tail
        }
        return k;
    }
    // Hormann's PTRS transformed rejection, exact for mean >= 10.
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    while (true) {
        double u = next_unit() - 0.5;
        double v = next_unit();
        double us = 0.5 - std::abs(u);
        long long k = static_cast<long long>(std::floor((2.0 * a / us + b) * u + mean + 0.43));
        if (us >= 0.07 && v <= v_r) return k;
        if (k < 0 || (us < 0.013 && v > us)) continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            static_cast<double>(k) * log_mean - mean - std::lgamma(static_cast<double>(k) + 1.0))
            return k;
    }
}

}  // namespace plancherel
