#include "plancherel/fluctuations.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "plancherel/quadrature.hpp"

namespace plancherel {

double delta_vertical(const Partition& lambda, long long n, double x) {
    if (n < 1) throw std::invalid_argument("delta_vertical: n must be >= 1");
    if (x < 0.0 || x > 2.0)
        throw std::invalid_argument("delta_vertical: x must lie in [0, 2]");
    const double root_n = std::sqrt(static_cast<double>(n));
    return static_cast<double>(profile_eval(lambda, root_n * x)) - root_n * omega(x);
}

double y_vertical(const Partition& lambda, long long n, double x) {
    if (n < 3) throw std::invalid_argument("y_vertical: n must be >= 3");
    if (!(x > 0.0 && x < 2.0))
        throw std::invalid_argument("y_vertical: x must lie in (0, 2)");
    return 2.0 * theta_of_x(x) * delta_vertical(lambda, n, x) /
           std::sqrt(std::log(static_cast<double>(n)));
}

double delta_rotated(const RotatedProfile& profile, long long n, double u) {
    if (n < 1) throw std::invalid_argument("delta_rotated: n must be >= 1");
    return std::sqrt(static_cast<double>(n)) * (profile.value(u) - omega_rotated(u));
}

double y_rotated(const RotatedProfile& profile, long long n, double u) {
    if (n < 3) throw std::invalid_argument("y_rotated: n must be >= 3");
    return std::numbers::pi * delta_rotated(profile, n, u) /
           std::sqrt(std::log(static_cast<double>(n)));
}

namespace {

// U_{k} as a polynomial via the recurrence; no domain guard (the functional's
// integrand extends past [-2, 2] whenever lambda_1 > 2 sqrt(n)).
double chebyshev_u_poly(int k, double u) {
    if (k == 0) return 1.0;
    double prev = 1.0, cur = u;
    for (int i = 2; i <= k; ++i) {
        double next = u * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

double chebyshev_u(int k, double u) {
    if (k < 0) throw std::invalid_argument("chebyshev_u: k must be >= 0");
    if (std::abs(u) > 2.0)
        throw std::invalid_argument("chebyshev_u: |u| must be <= 2");
    return chebyshev_u_poly(k, u);
}

double omega_deviation_moment(int k) {
    if (k < 1) throw std::invalid_argument("omega_deviation_moment: k must be >= 1");
    static std::mutex mutex;
    static std::map<int, double> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    // int_{-2}^{2} Omega(u) U_{k-1}(u) du = 2 int_0^pi Omega(2 cos a) sin(k a) da
    double omega_part = 2.0 * integrate_adaptive(
        [k](double a) {
            return omega_rotated(2.0 * std::cos(a)) * std::sin(k * a);
        },
        0.0, std::numbers::pi, 1e-10);
    // int_{-2}^{2} |u| U_{k-1}(u) du, exact per half (degree k integrand)
    const GaussRule& rule = gauss_legendre(k / 2 + 2);
    auto abs_poly = [k](double u) { return std::abs(u) * chebyshev_u_poly(k - 1, u); };
    double abs_part = rule.integrate(abs_poly, -2.0, 0.0) + rule.integrate(abs_poly, 0.0, 2.0);
    double moment = omega_part - abs_part;
    cache.emplace(k, moment);
    return moment;
}

double kerov_functional(const RotatedProfile& profile, long long n, int k) {
    if (k < 1) throw std::invalid_argument("kerov_functional: k must be >= 1");
    if (n < 0) throw std::invalid_argument("kerov_functional: n must be >= 0");
    if (n == 0) return 0.0;  // the sqrt(n) factor of the deviation field
    // Profile deviation part: (v(u) - |u|) U_{k-1}(u) is polynomial of degree
    // k on each segment once segments are split at u = 0.
    const auto& pts = profile.breakpoints();
    const GaussRule& rule = gauss_legendre(k / 2 + 2);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double u1 = pts[i].first, v1 = pts[i].second;
        double u2 = pts[i + 1].first, v2 = pts[i + 1].second;
        double slope = (v2 - v1) / (u2 - u1);
        auto piece = [&](double a, double b) {
            if (a >= b) return;
            acc += rule.integrate(
                [&](double u) {
                    double v = v1 + slope * (u - u1);
                    return (v - std::abs(u)) * chebyshev_u_poly(k - 1, u);
                },
                a, b);
        };
        if (u1 < 0.0 && u2 > 0.0) {
            piece(u1, 0.0);
            piece(0.0, u2);
        } else {
            piece(u1, u2);
        }
    }
    return std::sqrt(static_cast<double>(n)) * (acc - omega_deviation_moment(k));
}

double interval_threshold(double t, double x, double z) {
    if (!(t > 0)) throw std::invalid_argument("interval_threshold: t must be positive");
    if (!(x > 0.0 && x < 2.0))
        throw std::invalid_argument("interval_threshold: x must lie in (0, 2)");
    return 2.0 * std::sqrt(t) * std::cos(theta_of_x(x)) + z * std::sqrt(std::log(t));
}

long long interval_left_end(double t, double x, double z) {
    return static_cast<long long>(std::ceil(interval_threshold(t, x, z)));
}

long long count_interval(const Partition& lambda, double t, double x, double z) {
    return count_frobenius_at_least(lambda, interval_left_end(t, x, z));
}

}  // namespace plancherel
