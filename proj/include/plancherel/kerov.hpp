#pragma once

// Limit objects of the fluctuation theory: partial sums of the random
// Chebyshev series, their closed-form covariances, and the limiting Gaussian
// vector Z_s with covariance min(s, s') sampled through the Wiener-process
// decomposition.

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "plancherel/rng.hpp"

namespace plancherel {

/// One path of the truncated random series evaluated at several angles:
/// S_m(2 cos theta) = (2/pi) sum_{k=2}^{m} X_k sin(k theta) / sqrt(k), with a
/// single coefficient vector shared across all thetas. m >= 2,
/// theta in (0, pi).
std::vector<double> sample_partial_sum(int m, std::span<const double> thetas,
                                       RandomStream& stream);

/// Exact covariance of the partial sums:
/// (4/pi^2) sum_{k=2}^{m} sin(k theta) sin(k theta') / k.
double cov_partial_sum(double theta, double theta_prime, int m);

/// Gaussian vector spec with K(s,s) = 1, K(s,s') = min(s,s').
struct GaussianVectorSpec {
    std::vector<double> s_values;   // ascending, in [0, 1]
    Eigen::MatrixXd covariance;

    static GaussianVectorSpec make(std::vector<double> s_values);
    double min_eigenvalue() const;
};

/// Samples (Z_{s_0}, ..., Z_{s_m}) as W_s + zeta_s sqrt(1-s): Wiener
/// increments over the ascending s-grid plus independent point noise. The
/// construction realizes the covariance K exactly.
std::vector<double> sample_limit_vector(const GaussianVectorSpec& spec,
                                        RandomStream& stream);

/// Truncation-order heuristic m = ceil(sqrt(n)).
long long degrees_of_freedom(long long n);

}  // namespace plancherel
