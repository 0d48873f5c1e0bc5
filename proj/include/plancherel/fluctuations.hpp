#pragma once

// Fluctuation observables: Delta_n(x) and Y_n(x) in vertical coordinates,
// their rotated counterparts, Chebyshev test functionals of the deviation
// field, and the Frobenius counting statistic #I_t.

#include "plancherel/limit_shape.hpp"
#include "plancherel/partition.hpp"

namespace plancherel {

/// Delta_n(x) = lambda(sqrt(n) x) - sqrt(n) omega(x). Accepts x in [0, 2]
/// (x = 0 and x = 2 are the edge statistics).
double delta_vertical(const Partition& lambda, long long n, double x);

/// Y_n(x) = 2 theta_x Delta_n(x) / sqrt(log n); requires n >= 3, x in (0, 2).
double y_vertical(const Partition& lambda, long long n, double x);

/// Delta-tilde_n(u) = sqrt(n) (lambda-tilde_n(u) - Omega(u)); profile must be
/// built with scale sqrt(n). Exactly 0 beyond both supports.
double delta_rotated(const RotatedProfile& profile, long long n, double u);

/// Y-tilde_n(u) = pi Delta-tilde_n(u) / sqrt(log n); requires n >= 3.
double y_rotated(const RotatedProfile& profile, long long n, double u);

/// Modified Chebyshev polynomial of the second kind on the spectral interval:
/// U_k(2 cos theta) = sin((k+1) theta) / sin(theta), via the three-term
/// recurrence. Rejects |u| > 2.
double chebyshev_u(int k, double u);

/// Integral of Delta-tilde_n(u) U_{k-1}(u) over the line, k >= 1. The profile
/// part is integrated exactly per linear segment with a Gauss rule; the Omega
/// part uses cached adaptive quadrature in the theta substitution.
double kerov_functional(const RotatedProfile& profile, long long n, int k);

/// Cached moment integral of the limit shape against U_{k-1}:
/// int_{-2}^{2} (Omega(u) - |u|) U_{k-1}(u) du.
double omega_deviation_moment(int k);

/// Left end of the integer lattice interval I_t = [c, inf) with
/// c = 2 sqrt(t) cos(theta_x) + z sqrt(log t): returns ceil(c).
long long interval_left_end(double t, double x, double z);
double interval_threshold(double t, double x, double z);

/// #(D(lambda) ∩ I_t) for the interval above.
long long count_interval(const Partition& lambda, double t, double x, double z);

struct FluctuationSample {
    long long n = 0;          // or realized t-scale size
    double x_or_u = 0;
    double delta = 0;
    double y = 0;
    enum class Kind { vertical, rotated } kind = Kind::vertical;
};

}  // namespace plancherel
