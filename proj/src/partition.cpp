#include "plancherel/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace plancherel {

Partition::Partition(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::unchecked(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    p.weight_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0LL);
    return p;
}

Partition make_partition(std::vector<int> parts, bool allow_unsorted) {
    if (allow_unsorted) std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    const auto& p = lambda.parts();
    if (p.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(p[0]));
    for (int j = 1; j <= p[0]; ++j) {
        // number of parts >= j; parts are sorted decreasing
        auto it = std::lower_bound(p.begin(), p.end(), j, std::greater_equal<>());
        conj[static_cast<std::size_t>(j) - 1] = static_cast<int>(it - p.begin());
    }
    return Partition::unchecked(std::move(conj));
}

long long profile_eval(const Partition& lambda, double x) {
    if (x < 0) throw std::invalid_argument("profile_eval: x must be nonnegative");
    if (x == 0.0) return lambda.part(1);
    double c = std::ceil(x);
    if (c > static_cast<double>(lambda.length())) return 0;
    return lambda.part(static_cast<std::size_t>(c));
}

long long profile_at_index(const Partition& lambda, long long k) {
    if (k < 0) throw std::invalid_argument("profile_at_index: k must be nonnegative");
    if (k == 0) return lambda.part(1);
    if (k > static_cast<long long>(lambda.length())) return 0;
    return lambda.part(static_cast<std::size_t>(k));
}

namespace {

// Hook product over all cells, as exact u64 (valid while <= n! <= 20!).
std::uint64_t hook_product_u64(const std::vector<int>& p, const std::vector<int>& conj) {
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            std::uint64_t hook = static_cast<std::uint64_t>(p[i] - j - 1) +
                                 static_cast<std::uint64_t>(conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
            prod *= hook;
        }
    return prod;
}

double hook_log_sum(const std::vector<int>& p, const std::vector<int>& conj) {
    double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            int hook = (p[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
            s += std::log(static_cast<double>(hook));
        }
    return s;
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace

DimensionValue log_dimension(const Partition& lambda) {
    DimensionValue out;
    if (lambda.empty()) {
        out.exact = 1;
        out.log_value = 0.0;
        return out;
    }
    auto conj = conjugate(lambda).parts();
    out.log_value = std::lgamma(static_cast<double>(lambda.weight()) + 1.0) -
                    hook_log_sum(lambda.parts(), conj);
    if (lambda.weight() <= 20) {
        std::uint64_t nf = factorial_u64(static_cast<int>(lambda.weight()));
        std::uint64_t hp = hook_product_u64(lambda.parts(), conj);
        out.exact = nf / hp;  // hook product divides n! exactly
    }
    return out;
}

namespace {

std::uint64_t count_fillings(const std::vector<int>& shape, std::vector<int>& fill, long long remaining) {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (fill[r] >= shape[r]) continue;
        if (r > 0 && fill[r] >= fill[r - 1]) continue;  // column constraint
        ++fill[r];
        total += count_fillings(shape, fill, remaining - 1);
        --fill[r];
    }
    return total;
}

}  // namespace

std::uint64_t dimension_bruteforce(const Partition& lambda) {
    if (lambda.weight() > 12)
        throw std::invalid_argument("dimension_bruteforce: weight must be <= 12");
    if (lambda.empty()) return 1;
    std::vector<int> fill(lambda.length(), 0);
    return count_fillings(lambda.parts(), fill, lambda.weight());
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::unchecked(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    if (n > 40) throw std::invalid_argument("enumerate_partitions: n must be <= 40");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, n, acc, out);
    if (n == 0) out.assign(1, Partition{});
    return out;
}

PlancherelPmf plancherel_pmf(int n) {
    if (n < 0 || n > 20)
        throw std::invalid_argument("plancherel_pmf: exact arithmetic requires 0 <= n <= 20");
    PlancherelPmf pmf;
    pmf.n = n;
    pmf.n_factorial = factorial_u64(n);
    pmf.partitions = enumerate_partitions(n);
    pmf.d.reserve(pmf.partitions.size());
    for (const auto& lambda : pmf.partitions)
        pmf.d.push_back(*log_dimension(lambda).exact);
    return pmf;
}

std::uint64_t PlancherelPmf::sum_d_squared() const {
    std::uint64_t s = 0;
    for (std::uint64_t v : d) s += v * v;
    return s;
}

bool FrobeniusSet::contains(long long m) const {
    if (m <= tail_start) return true;
    return std::binary_search(explicit_points.begin(), explicit_points.end(), m,
                              std::greater<>());
}

FrobeniusSet frobenius_points(const Partition& lambda) {
    FrobeniusSet set;
    set.explicit_points.reserve(lambda.length());
    for (std::size_t i = 1; i <= lambda.length(); ++i)
        set.explicit_points.push_back(lambda.part(i) - static_cast<long long>(i));
    set.tail_start = -static_cast<long long>(lambda.length()) - 1;
    return set;
}

long long count_frobenius_at_least(const Partition& lambda, long long a) {
    const long long len = static_cast<long long>(lambda.length());
    long long count = 0;
    // lambda_i - i is strictly decreasing over i <= len
    for (long long i = 1; i <= len; ++i) {
        if (lambda.part(static_cast<std::size_t>(i)) - i >= a)
            ++count;
        else
            break;
    }
    // tail points -len-1, -len-2, ...: those >= a
    long long tail_start = -len - 1;
    if (a <= tail_start) count += tail_start - a + 1;
    return count;
}

std::string to_text(const Partition& lambda) {
    std::string out;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(lambda.parts()[i]);
    }
    return out;
}

Partition partition_from_text(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        if (tok.empty()) throw std::invalid_argument("partition text: empty component");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("partition text: invalid character");
            value = value * 10 + (c - '0');
            if (value > 1'000'000'000)
                throw std::invalid_argument("partition text: part out of range");
        }
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

}  // namespace plancherel
