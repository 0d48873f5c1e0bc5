#pragma once

// The Vershik-Kerov / Logan-Shepp limit shape: parametric inversion theta(x),
// omega(x), the rotated form Omega(u), and piecewise-linear rotated profiles
// of scaled Young diagrams.

#include <utility>
#include <vector>

#include "plancherel/partition.hpp"

namespace plancherel {

/// Unique theta in [0, pi] with (2/pi)(sin theta - theta cos theta) = x,
/// by bisection to absolute tolerance 1e-12. Monotone in x on [0, 2].
double theta_of_x(double x);

/// Inverse map: curve abscissa of a given theta in [0, pi].
double x_of_theta(double theta);

/// omega(x) = x + 2 cos(theta_x) on [0, 2], 0 beyond; decreasing on [0, 2].
double omega(double x);

/// Rotated limit shape Omega(u) = (2/pi)(u asin(u/2) + sqrt(4 - u^2)) for
/// |u| <= 2, |u| outside. The radical is evaluated as (2-|u|)(2+|u|) to keep
/// precision near the corners.
double omega_rotated(double u);

/// theta = arccos(u/2), for |u| <= 2.
double theta_of_u(double u);

/// Piecewise-linear rotated profile of a scaled diagram: slopes alternate
/// exactly +-1 between corners, v(u) = |u| outside the support. Corners are
/// held in exact integer coordinates (the unscaled diagram boundary), so area
/// identities can be checked exactly.
class RotatedProfile {
public:
    RotatedProfile(const Partition& lambda, double scale);

    double scale() const noexcept { return scale_; }
    double support_min() const noexcept { return u_min_; }
    double support_max() const noexcept { return u_max_; }

    double value(double u) const;                       // v(u)
    double deviation(double u) const;                   // v(u) - |u|

    /// Integral of (v - |u|) in unscaled integer coordinates; equals 2|lambda|.
    long long deviation_area_unscaled() const;
    double deviation_area() const;                      // unscaled / scale^2

    /// Scaled corner vertices, strictly increasing in u.
    const std::vector<std::pair<double, double>>& breakpoints() const {
        return scaled_;
    }
    /// Unscaled integer corner vertices (u, v).
    const std::vector<std::pair<long long, long long>>& corners_unscaled() const {
        return corners_;
    }

private:
    double scale_ = 1.0;
    double u_min_ = 0.0, u_max_ = 0.0;
    std::vector<std::pair<long long, long long>> corners_;
    std::vector<std::pair<double, double>> scaled_;
};

RotatedProfile rotate_profile(const Partition& lambda, double scale);

/// sup_{x >= 0} |lambda_bar_n(x) - omega(x)| for a diagram scaled by sqrt(n),
/// evaluated at the step points i/sqrt(n) and their left limits, where the
/// extrema of a staircase-vs-decreasing-curve comparison occur.
double sup_distance_to_omega(const Partition& lambda, long long n);

}  // namespace plancherel
