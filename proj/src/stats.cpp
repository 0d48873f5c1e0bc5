#include "plancherel/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace plancherel {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

namespace {

double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 10000; ++k) {
        term *= x / (a + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
    // modified Lentz continued fraction for Q(a, x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (!(a > 0)) throw std::invalid_argument("regularized_gamma_p: a must be positive");
    if (x < 0) throw std::invalid_argument("regularized_gamma_p: x must be nonnegative");
    if (x == 0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
    if (!(a > 0)) throw std::invalid_argument("regularized_gamma_q: a must be positive");
    if (x < 0) throw std::invalid_argument("regularized_gamma_q: x must be nonnegative");
    if (x == 0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi2_sf(double statistic, double dof) {
    if (statistic <= 0) return 1.0;
    return regularized_gamma_q(dof / 2.0, statistic / 2.0);
}

Moments compute_moments(std::span<const double> samples) {
    Moments m;
    m.count = samples.size();
    if (samples.empty()) return m;
    double mean = 0;
    for (double v : samples) mean += v;
    mean /= static_cast<double>(samples.size());
    double m2 = 0, m3 = 0, m4 = 0;
    for (double v : samples) {
        double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    const double n = static_cast<double>(samples.size());
    m.mean = mean;
    m.variance = samples.size() > 1 ? m2 / (n - 1.0) : 0.0;
    if (m2 > 0) {
        double s2 = m2 / n;
        m.skewness = (m3 / n) / std::pow(s2, 1.5);
        m.excess_kurtosis = (m4 / n) / (s2 * s2) - 3.0;
    }
    return m;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        // sup of |F_emp - F| over right-continuous functions: the lower gap
        // uses the left limit of F, so a reference atom at a sample point
        // contributes nothing
        double f_left =
            cdf(std::nextafter(samples[i], -std::numeric_limits<double>::infinity()));
        d = std::max(d, f_left - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        double t = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= t) ++i;
        while (j < b.size() && b[j] <= t) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

namespace {

struct PooledCells {
    std::vector<double> observed;
    std::vector<double> expected;
};

// pools each cell whose expected count is < minimum into the running group;
// any trailing light group merges into the previous cell
PooledCells pool_cells(std::span<const double> observed, std::span<const double> expected,
                       double minimum) {
    PooledCells out;
    double acc_obs = 0, acc_exp = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        acc_obs += observed[i];
        acc_exp += expected[i];
        if (acc_exp >= minimum) {
            out.observed.push_back(acc_obs);
            out.expected.push_back(acc_exp);
            acc_obs = acc_exp = 0;
        }
    }
    if (acc_exp > 0 || acc_obs > 0) {
        if (!out.observed.empty()) {
            out.observed.back() += acc_obs;
            out.expected.back() += acc_exp;
        } else {
            out.observed.push_back(acc_obs);
            out.expected.push_back(acc_exp);
        }
    }
    return out;
}

}  // namespace

Chi2Result chi2_gof(std::span<const std::uint64_t> observed,
                    std::span<const double> expected, int fitted_params) {
    if (observed.size() != expected.size())
        throw std::invalid_argument("chi2_gof: size mismatch");
    double prob_sum = 0;
    std::uint64_t total = 0;
    for (double p : expected) prob_sum += p;
    for (auto o : observed) total += o;
    if (std::abs(prob_sum - 1.0) > 1e-10)
        throw std::invalid_argument("chi2_gof: expected probabilities must sum to 1");
    if (total == 0) throw std::invalid_argument("chi2_gof: empty sample");

    std::vector<double> obs(observed.begin(), observed.end());
    std::vector<double> exp_counts(expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        exp_counts[i] = expected[i] * static_cast<double>(total);
    auto pooled = pool_cells(obs, exp_counts, 5.0);
    if (pooled.observed.size() < 2)
        throw std::invalid_argument("chi2_gof: fewer than two cells after pooling");

    Chi2Result r;
    r.cells = static_cast<int>(pooled.observed.size());
    r.dof = r.cells - 1 - fitted_params;
    if (r.dof < 1) throw std::invalid_argument("chi2_gof: nonpositive degrees of freedom");
    for (std::size_t i = 0; i < pooled.observed.size(); ++i) {
        double d = pooled.observed[i] - pooled.expected[i];
        r.statistic += d * d / pooled.expected[i];
    }
    r.p_value = chi2_sf(r.statistic, static_cast<double>(r.dof));
    return r;
}

Chi2Result chi2_two_sample(std::span<const std::uint64_t> a,
                           std::span<const std::uint64_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("chi2_two_sample: size mismatch");
    double na = 0, nb = 0;
    for (auto v : a) na += static_cast<double>(v);
    for (auto v : b) nb += static_cast<double>(v);
    if (na == 0 || nb == 0) throw std::invalid_argument("chi2_two_sample: empty sample");

    // pool on combined expected counts
    std::vector<double> obs_a(a.begin(), a.end()), obs_b(b.begin(), b.end());
    std::vector<double> pooled_a, pooled_b;
    double acc_a = 0, acc_b = 0;
    const double scale_a = na / (na + nb), scale_b = nb / (na + nb);
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc_a += obs_a[i];
        acc_b += obs_b[i];
        double combined = acc_a + acc_b;
        if (combined * scale_a >= 5.0 && combined * scale_b >= 5.0) {
            pooled_a.push_back(acc_a);
            pooled_b.push_back(acc_b);
            acc_a = acc_b = 0;
        }
    }
    if (acc_a + acc_b > 0) {
        if (!pooled_a.empty()) {
            pooled_a.back() += acc_a;
            pooled_b.back() += acc_b;
        } else {
            pooled_a.push_back(acc_a);
            pooled_b.push_back(acc_b);
        }
    }
    if (pooled_a.size() < 2)
        throw std::invalid_argument("chi2_two_sample: fewer than two cells after pooling");

    Chi2Result r;
    r.cells = static_cast<int>(pooled_a.size());
    r.dof = r.cells - 1;
    for (std::size_t i = 0; i < pooled_a.size(); ++i) {
        double row = pooled_a[i] + pooled_b[i];
        double ea = row * scale_a;
        double eb = row * scale_b;
        r.statistic += (pooled_a[i] - ea) * (pooled_a[i] - ea) / ea +
                       (pooled_b[i] - eb) * (pooled_b[i] - eb) / eb;
    }
    r.p_value = chi2_sf(r.statistic, static_cast<double>(r.dof));
    return r;
}

LatticeGofResult lattice_normal_gof(std::span<const long long> values) {
    if (values.size() < 20)
        throw std::invalid_argument("lattice_normal_gof: needs at least 20 samples");
    LatticeGofResult out;
    double mean = 0;
    for (long long v : values) mean += static_cast<double>(v);
    mean /= static_cast<double>(values.size());
    double ss = 0;
    for (long long v : values) {
        double d = static_cast<double>(v) - mean;
        ss += d * d;
    }
    double sd = std::sqrt(ss / (static_cast<double>(values.size()) - 1.0));
    if (!(sd > 0)) throw std::invalid_argument("lattice_normal_gof: degenerate sample");
    out.fitted_mean = mean;
    out.fitted_sd = sd;

    long long lo = *std::min_element(values.begin(), values.end());
    long long hi = *std::max_element(values.begin(), values.end());
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(hi - lo + 1), 0);
    for (long long v : values) ++counts[static_cast<std::size_t>(v - lo)];
    std::vector<double> probs(counts.size());
    for (long long c = lo; c <= hi; ++c) {
        double upper = c == hi ? 1.0
                               : normal_cdf((static_cast<double>(c) + 0.5 - mean) / sd);
        double lower = c == lo ? 0.0
                               : normal_cdf((static_cast<double>(c) - 0.5 - mean) / sd);
        probs[static_cast<std::size_t>(c - lo)] = upper - lower;
    }
    out.chi2 = chi2_gof(counts, probs, 2);
    for (long long c = lo; c <= hi; ++c) {
        out.cell_values.push_back(c);
        out.cell_counts.push_back(counts[static_cast<std::size_t>(c - lo)]);
    }
    return out;
}

CovEstimate empirical_cov(std::span<const std::pair<double, double>> pairs) {
    if (pairs.size() < 10) throw std::invalid_argument("empirical_cov: needs >= 10 pairs");
    const double n = static_cast<double>(pairs.size());
    double sx = 0, sy = 0, sxy = 0;
    for (auto [x, y] : pairs) {
        sx += x;
        sy += y;
        sxy += x * y;
    }
    CovEstimate out;
    out.covariance = (sxy - sx * sy / n) / (n - 1.0);
    // delete-1 jackknife from the same sums
    double mean_loo = 0;
    std::vector<double> loo(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [x, y] = pairs[i];
        double sx_i = sx - x, sy_i = sy - y, sxy_i = sxy - x * y;
        loo[i] = (sxy_i - sx_i * sy_i / (n - 1.0)) / (n - 2.0);
        mean_loo += loo[i];
    }
    mean_loo /= n;
    double ss = 0;
    for (double v : loo) ss += (v - mean_loo) * (v - mean_loo);
    out.std_error = std::sqrt((n - 1.0) / n * ss);
    return out;
}

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("pearson_correlation: need matching samples");
    const double n = static_cast<double>(a.size());
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double saa = 0, sbb = 0, sab = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double da = a[i] - ma, db = b[i] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    return sab / std::sqrt(saa * sbb);
}

}  // namespace plancherel
