#include "plancherel/kerov.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plancherel {

std::vector<double> sample_partial_sum(int m, std::span<const double> thetas,
                                       RandomStream& stream) {
    if (m < 2) throw std::invalid_argument("sample_partial_sum: m must be >= 2");
    for (double theta : thetas)
        if (!(theta > 0.0 && theta < std::numbers::pi))
            throw std::invalid_argument("sample_partial_sum: theta must lie in (0, pi)");
    std::vector<double> coeff(static_cast<std::size_t>(m) - 1);
    for (auto& c : coeff) c = stream.next_normal();  // X_2 .. X_m, one path
    std::vector<double> out(thetas.size(), 0.0);
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        double acc = 0.0;
        for (int k = 2; k <= m; ++k)
            acc += coeff[static_cast<std::size_t>(k) - 2] * std::sin(k * thetas[i]) /
                   std::sqrt(static_cast<double>(k));
        out[i] = (2.0 / std::numbers::pi) * acc;
    }
    return out;
}

double cov_partial_sum(double theta, double theta_prime, int m) {
    if (m < 2) throw std::invalid_argument("cov_partial_sum: m must be >= 2");
    double acc = 0.0;
    for (int k = 2; k <= m; ++k)
        acc += std::sin(k * theta) * std::sin(k * theta_prime) / static_cast<double>(k);
    return 4.0 / (std::numbers::pi * std::numbers::pi) * acc;
}

GaussianVectorSpec GaussianVectorSpec::make(std::vector<double> s_values) {
    for (double s : s_values)
        if (s < 0.0 || s > 1.0)
            throw std::invalid_argument("GaussianVectorSpec: s must lie in [0, 1]");
    if (!std::is_sorted(s_values.begin(), s_values.end()))
        throw std::invalid_argument("GaussianVectorSpec: s values must be ascending");
    GaussianVectorSpec spec;
    const auto n = static_cast<Eigen::Index>(s_values.size());
    spec.covariance.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            spec.covariance(i, j) =
                i == j ? 1.0
                       : std::min(s_values[static_cast<std::size_t>(i)],
                                  s_values[static_cast<std::size_t>(j)]);
    spec.s_values = std::move(s_values);
    return spec;
}

double GaussianVectorSpec::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(covariance);
    return solver.eigenvalues().minCoeff();
}

std::vector<double> sample_limit_vector(const GaussianVectorSpec& spec,
                                        RandomStream& stream) {
    const auto& s = spec.s_values;
    std::vector<double> out(s.size());
    double w = 0.0, prev_s = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        double ds = s[i] - prev_s;
        if (ds > 0.0) w += std::sqrt(ds) * stream.next_normal();
        prev_s = s[i];
        out[i] = w + stream.next_normal() * std::sqrt(1.0 - s[i]);
    }
    return out;
}

long long degrees_of_freedom(long long n) {
    if (n < 1) throw std::invalid_argument("degrees_of_freedom: n must be >= 1");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r > 1 && (r - 1) * (r - 1) >= n) --r;
    return r;
}

}  // namespace plancherel
