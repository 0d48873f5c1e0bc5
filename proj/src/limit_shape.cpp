#include "plancherel/limit_shape.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plancherel {

double x_of_theta(double theta) {
    return (2.0 / std::numbers::pi) * (std::sin(theta) - theta * std::cos(theta));
}

double theta_of_x(double x) {
    if (x < 0.0 || x > 2.0) throw std::invalid_argument("theta_of_x: x must lie in [0, 2]");
    if (x == 0.0) return 0.0;
    if (x == 2.0) return std::numbers::pi;
    double lo = 0.0, hi = std::numbers::pi;
    // bisection: pi / 2^52 < 1e-12; the derivative vanishes at theta = 0,
    // which rules out plain Newton at the edge
    for (int i = 0; i < 60 && hi - lo > 1e-13; ++i) {
        double mid = 0.5 * (lo + hi);
        (x_of_theta(mid) < x ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double omega(double x) {
    if (x < 0.0) throw std::invalid_argument("omega: x must be nonnegative");
    if (x >= 2.0) return 0.0;
    return x + 2.0 * std::cos(theta_of_x(x));
}

double omega_rotated(double u) {
    double au = std::abs(u);
    if (au >= 2.0) return au;
    double s = std::sqrt((2.0 - au) * (2.0 + au));
    return (2.0 / std::numbers::pi) * (u * std::asin(u / 2.0) + s);
}

double theta_of_u(double u) {
    if (u < -2.0 || u > 2.0) throw std::invalid_argument("theta_of_u: |u| must be <= 2");
    return std::acos(u / 2.0);
}

RotatedProfile::RotatedProfile(const Partition& lambda, double scale) : scale_(scale) {
    if (!(scale > 0)) throw std::invalid_argument("RotatedProfile: scale must be positive");
    const auto& parts = lambda.parts();
    const long long len = static_cast<long long>(parts.size());
    // Boundary walk in u = x - y, v = x + y: a horizontal run of columns at
    // height h contributes a slope +1 segment, each drop a slope -1 segment.
    // Corners are emitted only where the slope changes, so they alternate.
    if (len == 0) {
        corners_.emplace_back(0, 0);
    } else {
        corners_.emplace_back(-static_cast<long long>(parts[0]), parts[0]);
        long long i = 0;
        while (i < len) {
            long long h = parts[static_cast<std::size_t>(i)];
            long long j = i;
            while (j < len && parts[static_cast<std::size_t>(j)] == h) ++j;
            corners_.emplace_back(j - h, j + h);  // outer corner after the run
            long long next = j < len ? parts[static_cast<std::size_t>(j)] : 0;
            corners_.emplace_back(j - next, j + next);  // inner corner after the drop
            i = j;
        }
    }
    scaled_.reserve(corners_.size());
    for (auto [u, v] : corners_)
        scaled_.emplace_back(static_cast<double>(u) / scale, static_cast<double>(v) / scale);
    u_min_ = scaled_.front().first;
    u_max_ = scaled_.back().first;
}

double RotatedProfile::value(double u) const {
    if (u <= u_min_ || u >= u_max_) return std::abs(u);
    auto it = std::upper_bound(scaled_.begin(), scaled_.end(), u,
                               [](double a, const std::pair<double, double>& b) {
                                   return a < b.first;
                               });
    // it points past the segment start; interpolate on [it-1, it]
    auto [u1, v1] = *(it - 1);
    auto [u2, v2] = *it;
    double w = (u - u1) / (u2 - u1);
    return v1 + w * (v2 - v1);
}

double RotatedProfile::deviation(double u) const { return value(u) - std::abs(u); }

long long RotatedProfile::deviation_area_unscaled() const {
    // trapezoid sums of the integer polyline minus the integral of |u|;
    // every term is an integer because consecutive corners differ by
    // (du, dv) with |dv| = |du| and matching parities.
    long long twice_area = 0;  // 2 * integral of v over [u_min, u_max]
    for (std::size_t i = 1; i < corners_.size(); ++i) {
        auto [u1, v1] = corners_[i - 1];
        auto [u2, v2] = corners_[i];
        twice_area += (u2 - u1) * (v1 + v2);
    }
    auto [a, va] = corners_.front();
    auto [b, vb] = corners_.back();
    long long twice_abs = a * std::abs(a) * -1 + b * std::abs(b);  // 2*int_a^b |u| du
    return (twice_area - twice_abs) / 2;
}

double RotatedProfile::deviation_area() const {
    return static_cast<double>(deviation_area_unscaled()) / (scale_ * scale_);
}

RotatedProfile rotate_profile(const Partition& lambda, double scale) {
    return RotatedProfile(lambda, scale);
}

double sup_distance_to_omega(const Partition& lambda, long long n) {
    if (n < 1) throw std::invalid_argument("sup_distance_to_omega: n must be >= 1");
    const double root_n = std::sqrt(static_cast<double>(n));
    const long long len = static_cast<long long>(lambda.length());
    double sup = 0.0;
    for (long long i = 1; i <= len; ++i) {
        double bar = static_cast<double>(lambda.part(static_cast<std::size_t>(i))) / root_n;
        // on ((i-1)/sqrt(n), i/sqrt(n)] the scaled profile equals bar; omega is
        // decreasing, so the extrema sit at the two interval ends
        double left = omega(std::min(2.0, static_cast<double>(i - 1) / root_n));
        double right = omega(std::min(2.0, static_cast<double>(i) / root_n));
        sup = std::max(sup, std::max(std::abs(bar - left), std::abs(bar - right)));
    }
    // beyond the last part the profile is 0 and omega still decays to 0
    double tail_x = static_cast<double>(len) / root_n;
    if (tail_x < 2.0) sup = std::max(sup, omega(tail_x));
    return sup;
}

}  // namespace plancherel
