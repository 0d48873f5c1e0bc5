#pragma once

// Exact Plancherel samplers: RSK on uniform permutations, the Plancherel
// growth chain, and the poissonized mixture. All draws are pure functions of
// a RandomStream, so replicas parallelize with disjoint streams.

#include <cstdint>
#include <span>
#include <vector>

#include "plancherel/partition.hpp"
#include "plancherel/rng.hpp"

namespace plancherel {

/// Fisher-Yates shuffle of 1..n, all n! outcomes equally likely. n >= 1.
std::vector<std::int32_t> sample_uniform_permutation(int n, RandomStream& stream);

struct RskResult {
    Partition shape;
    int lis = 0;  // longest increasing subsequence length = lambda_1
};

/// Shape of the Schensted insertion tableau. Validates that the input is a
/// permutation of 1..n.
RskResult rsk_shape(std::span<const std::int32_t> permutation);

/// Exact Plancherel(n) draw via RSK on a uniform permutation.
Partition sample_plancherel_rsk(long long n, RandomStream& stream);

/// Exact Plancherel(n) draw via the growth chain: at step k an addable corner
/// is chosen with probability d_{lambda+box} / ((k+1) d_lambda), computed from
/// hook ratios along the affected row and column only.
Partition sample_plancherel_growth(long long n, RandomStream& stream);

/// Transition probabilities of the growth chain out of lambda, one entry per
/// addable corner in row order (last entry = new part of size 1). Sums to 1.
std::vector<double> growth_corner_probabilities(const Partition& lambda);

/// Draw from the poissonization P^t: N ~ Poisson(t), then Plancherel(N).
Partition sample_poissonized(double t, RandomStream& stream);

enum class SamplerKind { rsk, growth, poissonized };

struct SampleBatch {
    double n_or_t = 0;
    SamplerKind kind = SamplerKind::rsk;
    std::uint64_t master_seed = 0;
    std::vector<Partition> draws;             // indexed by replica
    std::vector<long long> realized_n;        // |draw|; equals N for poissonized
};

/// Replicated draws with per-replica derived streams; deterministic by
/// replica index regardless of thread count.
SampleBatch sample_batch(SamplerKind kind, double n_or_t, int replicas,
                         std::uint64_t master_seed, int threads = 1);

const char* to_string(SamplerKind kind);
SamplerKind sampler_kind_from_string(std::string_view name);

}  // namespace plancherel
