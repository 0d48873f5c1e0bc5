#pragma once

// Discrete Bessel kernel J(x, y; t) of the poissonized Frobenius point
// process, determinantal correlation functions, and exact kernel predictions
// for the counting statistic #I_t.

#include <span>

#include "plancherel/bessel.hpp"

namespace plancherel {

/// Off-diagonal kernel value sqrt(t) (J_x J_{y+1} - J_{x+1} J_y) / (x - y);
/// symmetric in (x, y). x == y routes to kernel_diagonal.
double kernel_value(long long x, long long y, const BesselTable& table);

/// Diagonal J(x, x; t) = sum_{s >= 1} J_{x+s}^2 — the point-inclusion
/// probability, in [0, 1]. (The closed form with order-derivatives is
/// numerically awkward; the sum representation is exact and stable.)
double kernel_diagonal(long long x, const BesselTable& table);

/// k-point correlation rho_k = det[J(x_i, x_j; t)] over pairwise distinct
/// integer points, by pivoted elimination.
double correlation_rho(std::span<const long long> points, const BesselTable& table);

struct KernelPrediction {
    double t = 0, x = 0, z = 0;
    double mean = 0;             // sum of kernel_diagonal over I_t
    double variance = 0;         // mean - double sum of J(x,y)^2 over I_t
    double lemma1_mean = 0;      // sqrt(t) x - (z theta_x / pi) sqrt(log t)
    double lemma1_variance = 0;  // log(t) / (4 pi^2)
    long long interval_start = 0;
    long long cutoff = 0;
    double tail_bound = 0;       // verified mass of diagonal beyond cutoff
};

/// Exact determinantal mean/variance of #I_t plus the asymptotic predictions.
/// The diagonal sum is truncated at the verified cutoff (tail < 1e-12,
/// widened by doubling on failure). t >= 2.
KernelPrediction predict_counts(double t, double x, double z, int threads = 1);

}  // namespace plancherel
