#include "plancherel/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "plancherel/parallel.hpp"

namespace plancherel {

std::vector<std::int32_t> sample_uniform_permutation(int n, RandomStream& stream) {
    if (n < 1) throw std::invalid_argument("sample_uniform_permutation: n must be >= 1");
    std::vector<std::int32_t> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(stream.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    return perm;
}

namespace {

// Schensted row insertion, shape only. Bumping paths move weakly left, so
// each row's binary search is capped by the position bumped in the row above.
Partition rsk_shape_unchecked(std::span<const std::int32_t> perm) {
    std::vector<std::vector<std::int32_t>> rows;
    rows.reserve(64);
    for (std::int32_t value : perm) {
        std::int32_t v = value;
        std::size_t r = 0;
        std::size_t cap = SIZE_MAX;
        while (true) {
            if (r == rows.size()) {
                rows.emplace_back();
                rows.back().reserve(8);
                rows.back().push_back(v);
                break;
            }
            auto& row = rows[r];
            if (row.back() < v) {
                row.push_back(v);
                break;
            }
            const std::int32_t* base = row.data();
            std::size_t lo = 0;
            std::size_t hi = std::min(row.size(), cap);
            while (lo < hi) {
                std::size_t mid = (lo + hi) / 2;
                if (base[mid] <= v)
                    lo = mid + 1;
                else
                    hi = mid;
            }
            std::int32_t bumped = row[lo];
            row[lo] = v;
            v = bumped;
            cap = lo + 1;
            ++r;
        }
    }
    std::vector<int> shape(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) shape[i] = static_cast<int>(rows[i].size());
    return Partition::unchecked(std::move(shape));
}

}  // namespace

RskResult rsk_shape(std::span<const std::int32_t> permutation) {
    const auto n = permutation.size();
    std::vector<bool> seen(n, false);
    for (std::int32_t v : permutation) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("rsk_shape: input is not a permutation of 1..n");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
    RskResult out;
    out.shape = rsk_shape_unchecked(permutation);
    out.lis = out.shape.part(1);
    return out;
}

Partition sample_plancherel_rsk(long long n, RandomStream& stream) {
    if (n < 0) throw std::invalid_argument("sample_plancherel_rsk: n must be nonnegative");
    if (n == 0) return {};
    auto perm = sample_uniform_permutation(static_cast<int>(n), stream);
    return rsk_shape_unchecked(perm);
}

namespace {

// Probability of adding a box at the end of parts-row r (0-based; r == len
// appends a new part): product of h/(h+1) over existing cells in the affected
// row and column.
double corner_probability(const std::vector<int>& parts, const std::vector<int>& conj,
                          std::size_t r) {
    const std::size_t len = parts.size();
    double prob = 1.0;
    if (r < len) {
        int row_len = parts[r];
        for (int j = 0; j < row_len; ++j) {
            double h = static_cast<double>(row_len - j - 1) +
                       static_cast<double>(conj[static_cast<std::size_t>(j)]) -
                       static_cast<double>(r) - 1.0 + 1.0;
            prob *= h / (h + 1.0);
        }
        // column of the new cell: c = parts[r] (0-based column index)
        int c = parts[r];
        if (c < static_cast<int>(conj.size())) {
            int col_len = conj[static_cast<std::size_t>(c)];
            for (int i = 0; i < col_len; ++i) {
                double h = static_cast<double>(parts[static_cast<std::size_t>(i)] - c - 1) +
                           static_cast<double>(col_len - i - 1) + 1.0;
                prob *= h / (h + 1.0);
            }
        }
    } else {
        // new part of size 1 at the bottom: column 0 of length len
        for (std::size_t i = 0; i < len; ++i) {
            double h = static_cast<double>(parts[i] - 1) + static_cast<double>(len - i - 1) + 1.0;
            prob *= h / (h + 1.0);
        }
    }
    return prob;
}

}  // namespace

std::vector<double> growth_corner_probabilities(const Partition& lambda) {
    const auto& parts = lambda.parts();
    auto conj = conjugate(lambda).parts();
    std::vector<double> probs;
    for (std::size_t r = 0; r <= parts.size(); ++r) {
        if (r > 0 && r < parts.size() && parts[r - 1] == parts[r]) continue;
        probs.push_back(corner_probability(parts, conj, r));
    }
    return probs;
}

Partition sample_plancherel_growth(long long n, RandomStream& stream) {
    if (n < 0) throw std::invalid_argument("sample_plancherel_growth: n must be nonnegative");
    std::vector<int> parts;
    std::vector<int> conj;
    std::vector<std::size_t> corners;
    std::vector<double> weights;
    for (long long step = 0; step < n; ++step) {
        corners.clear();
        weights.clear();
        double total = 0.0;
        for (std::size_t r = 0; r <= parts.size(); ++r) {
            if (r > 0 && r < parts.size() && parts[r - 1] == parts[r]) continue;
            double w = corner_probability(parts, conj, r);
            corners.push_back(r);
            weights.push_back(w);
            total += w;
        }
        double u = stream.next_unit() * total;
        std::size_t pick = corners.size() - 1;
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (u <= acc) {
                pick = i;
                break;
            }
        }
        std::size_t r = corners[pick];
        if (r == parts.size())
            parts.push_back(1);
        else
            ++parts[r];
        std::size_t c = static_cast<std::size_t>(parts[r]) - 1;
        if (c == conj.size())
            conj.push_back(1);
        else
            ++conj[c];
    }
    return Partition::unchecked(std::move(parts));
}

Partition sample_poissonized(double t, RandomStream& stream) {
    if (!(t > 0)) throw std::invalid_argument("sample_poissonized: t must be positive");
    long long n = stream.next_poisson(t);
    return sample_plancherel_rsk(n, stream);
}

SampleBatch sample_batch(SamplerKind kind, double n_or_t, int replicas,
                         std::uint64_t master_seed, int threads) {
    if (replicas < 1) throw std::invalid_argument("sample_batch: replicas must be >= 1");
    if (kind != SamplerKind::poissonized) {
        if (n_or_t < 0 || n_or_t != std::floor(n_or_t))
            throw std::invalid_argument("sample_batch: n must be a nonnegative integer");
    } else if (!(n_or_t > 0)) {
        throw std::invalid_argument("sample_batch: t must be positive");
    }
    SampleBatch batch;
    batch.n_or_t = n_or_t;
    batch.kind = kind;
    batch.master_seed = master_seed;
    batch.draws = run_replicas<Partition>(
        replicas, threads, master_seed, [&](int, RandomStream& stream) {
            switch (kind) {
                case SamplerKind::rsk:
                    return sample_plancherel_rsk(static_cast<long long>(n_or_t), stream);
                case SamplerKind::growth:
                    return sample_plancherel_growth(static_cast<long long>(n_or_t), stream);
                case SamplerKind::poissonized:
                default:
                    return sample_poissonized(n_or_t, stream);
            }
        });
    batch.realized_n.reserve(batch.draws.size());
    for (const auto& d : batch.draws) batch.realized_n.push_back(d.weight());
    return batch;
}

const char* to_string(SamplerKind kind) {
    switch (kind) {
        case SamplerKind::rsk: return "rsk";
        case SamplerKind::growth: return "growth";
        case SamplerKind::poissonized: return "poissonized";
    }
    return "rsk";
}

SamplerKind sampler_kind_from_string(std::string_view name) {
    if (name == "rsk") return SamplerKind::rsk;
    if (name == "growth") return SamplerKind::growth;
    if (name == "poissonized") return SamplerKind::poissonized;
    throw std::invalid_argument("unknown sampler kind: " + std::string(name));
}

}  // namespace plancherel
