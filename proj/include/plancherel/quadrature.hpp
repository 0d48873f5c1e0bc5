#pragma once

// Numeric integration: adaptive Gauss-Kronrod 15(7) and exact Gauss-Legendre
// rules of arbitrary order for per-segment polynomial integrals.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace plancherel {

namespace detail {
// QUADPACK dqk15 nodes and weights (positive half; node 0 last).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
void kronrod15(F&& f, double a, double b, double& value, double& error) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kKronrodNodes[i]);
        fv[14 - i] = f(c + h * kKronrodNodes[i]);
    }
    fv[7] = f(c);
    double kr = 0.0, gs = 0.0;
    for (int i = 0; i < 7; ++i) kr += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
    kr += kKronrodWeights[7] * fv[7];
    for (int i = 0; i < 3; ++i) gs += kGaussWeights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    gs += kGaussWeights[3] * fv[7];
    value = kr * h;
    double diff = std::abs(kr - gs) * std::abs(h);
    error = diff;
}

template <typename F>
double integrate_rec(F&& f, double a, double b, double tol, int depth) {
    double value, error;
    kronrod15(f, a, b, value, error);
    if (error <= tol || depth >= 48) return value;
    double mid = 0.5 * (a + b);
    return integrate_rec(f, a, mid, 0.5 * tol, depth + 1) +
           integrate_rec(f, mid, b, 0.5 * tol, depth + 1);
}
}  // namespace detail

/// Adaptive Gauss-Kronrod 15(7) to an absolute tolerance.
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol) {
    if (!(abs_tol > 0)) throw std::invalid_argument("integrate_adaptive: tolerance must be positive");
    if (a == b) return 0.0;
    return detail::integrate_rec(f, a, b, abs_tol, 0);
}

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
/// 2*order - 1. Rules are computed once per order and cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    template <typename F>
    double integrate(F&& f, double a, double b) const {
        const double c = 0.5 * (a + b);
        const double h = 0.5 * (b - a);
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(c + h * nodes[i]);
        return acc * h;
    }
};

const GaussRule& gauss_legendre(int order);

}  // namespace plancherel
