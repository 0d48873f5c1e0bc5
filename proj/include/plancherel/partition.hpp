#pragma once

// Exact partition combinatorics: representation, conjugation, profiles,
// Frobenius coordinates, tableau dimensions and Plancherel probabilities.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plancherel {

/// A partition of n: weakly decreasing positive parts. The empty sequence
/// is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Bypasses validation; caller guarantees weakly decreasing positive parts.
    static Partition unchecked(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    long long weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based part access; parts beyond the length are 0.
    int part(std::size_t i) const noexcept {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    long long weight_ = 0;
};

/// Validating constructor wrapper. With allow_unsorted the input is sorted
/// into decreasing order first; otherwise order violations are rejected.
Partition make_partition(std::vector<int> parts, bool allow_unsorted = false);

Partition conjugate(const Partition& lambda);

/// The boundary profile lambda(x) = lambda_{ceil(x)}, with lambda(0) = lambda_1.
/// Left-continuous step function; 0 beyond the last part. Rejects x < 0.
long long profile_eval(const Partition& lambda, double x);

/// Same profile on exact integer indices (k >= 0, lambda(0) = lambda_1).
long long profile_at_index(const Partition& lambda, long long k);

struct DimensionValue {
    std::optional<std::uint64_t> exact;  // present iff weight <= 20
    double log_value = 0.0;              // log d_lambda, always
};

/// Hook-length dimension d_lambda. Exact in 64-bit integers for weight <= 20
/// (20! < 2^63), log form for all weights.
DimensionValue log_dimension(const Partition& lambda);

/// Counts standard tableaux by exhaustive recursion over fillings.
/// Test oracle for log_dimension; rejects weight > 12.
std::uint64_t dimension_bruteforce(const Partition& lambda);

/// All partitions of n in reverse-lexicographic order, n <= 40.
std::vector<Partition> enumerate_partitions(int n);

/// Exact Plancherel distribution on partitions of n <= 20: probabilities
/// d^2 / n! with a common denominator held exactly.
struct PlancherelPmf {
    int n = 0;
    std::uint64_t n_factorial = 1;
    std::vector<Partition> partitions;      // reverse-lex order
    std::vector<std::uint64_t> d;           // d_lambda per partition
    std::uint64_t d_squared(std::size_t i) const { return d[i] * d[i]; }
    double probability(std::size_t i) const {
        return static_cast<double>(d_squared(i)) / static_cast<double>(n_factorial);
    }
    std::uint64_t sum_d_squared() const;
};

PlancherelPmf plancherel_pmf(int n);

/// The descent set D(lambda) = {lambda_i - i : i >= 1}. Points with
/// i <= length are explicit; below tail_start = -length-1 every integer
/// belongs to the set (lambda_i = 0 there).
struct FrobeniusSet {
    std::vector<long long> explicit_points;  // strictly decreasing
    long long tail_start = -1;
    bool contains(long long m) const;
};

FrobeniusSet frobenius_points(const Partition& lambda);

/// #(D(lambda) ∩ [a, inf)). Finite for every integer a: below the explicit
/// points the set is exactly {tail_start, tail_start-1, ...}, of which only
/// finitely many are >= a. Satisfies count < k  <=>  lambda_k - k < a.
long long count_frobenius_at_least(const Partition& lambda, long long a);

/// Text format used in CSV columns and CLI arguments: comma-separated parts
/// in decreasing order, empty string for the empty partition.
std::string to_text(const Partition& lambda);
Partition partition_from_text(std::string_view text);

}  // namespace plancherel
