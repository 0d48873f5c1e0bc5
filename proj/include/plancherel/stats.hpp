#pragma once

// Statistics toolkit backing the experiment verifications: normal CDF,
// chi-square goodness of fit with cell pooling, Kolmogorov-Smirnov distances,
// moment summaries, covariance with jackknife errors, and the lattice-aware
// normality test used for the desk-scale CLT checks.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace plancherel {

/// Standard normal CDF via the complementary error function; absolute error
/// below 1e-12 everywhere.
double normal_cdf(double z);
double normal_pdf(double z);

/// Regularized incomplete gamma P(a, x) and Q(a, x) = 1 - P(a, x), by series
/// / continued fraction with 1e-14 termination.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

/// Upper-tail chi-square p-value with dof degrees of freedom.
double chi2_sf(double statistic, double dof);

struct Moments {
    double mean = 0;
    double variance = 0;         // unbiased
    double skewness = 0;
    double excess_kurtosis = 0;
    std::size_t count = 0;
};
Moments compute_moments(std::span<const double> samples);

/// Kolmogorov-Smirnov sup-distance of the empirical CDF against a reference
/// CDF, both one-sided parts evaluated at the order statistics.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Two-sample KS distance.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

struct Chi2Result {
    double statistic = 0;
    double p_value = 1;
    int dof = 0;
    int cells = 0;  // after pooling
};

/// Pearson chi-square against expected cell probabilities (must sum to 1
/// within 1e-10). Cells with expected count < 5 are pooled with their right
/// neighbor, in the order given; dof = cells - 1 - fitted_params.
Chi2Result chi2_gof(std::span<const std::uint64_t> observed,
                    std::span<const double> expected, int fitted_params = 0);

/// Two-sample chi-square on a shared cell layout; cells are pooled until the
/// pooled expected count (under the combined proportions) reaches 5.
Chi2Result chi2_two_sample(std::span<const std::uint64_t> a,
                           std::span<const std::uint64_t> b);

struct LatticeGofResult {
    Chi2Result chi2;
    double fitted_mean = 0;
    double fitted_sd = 0;
    std::vector<long long> cell_values;      // lattice cells after pooling
    std::vector<std::uint64_t> cell_counts;
};

/// Lattice-aware normality test: integer-valued samples are compared against
/// Gaussian cell masses Phi((c + 1/2 - m)/s) - Phi((c - 1/2 - m)/s) with
/// fitted mean and sd (dof loses 2), outer cells extended to the tails.
LatticeGofResult lattice_normal_gof(std::span<const long long> values);

struct CovEstimate {
    double covariance = 0;
    double std_error = 0;  // delete-1 jackknife
};

/// Unbiased covariance with jackknife standard error; needs >= 10 pairs.
CovEstimate empirical_cov(std::span<const std::pair<double, double>> pairs);

double pearson_correlation(std::span<const double> a, std::span<const double> b);

}  // namespace plancherel
