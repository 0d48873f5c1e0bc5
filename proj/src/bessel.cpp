#include "plancherel/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace plancherel {

namespace {
constexpr int kMaxOrderBudget = 16'000'000;
constexpr double kRescaleThreshold = 1e280;
constexpr double kRescaleFactor = 1e-280;
}  // namespace

BesselTable BesselTable::build(double t, int m_max) {
    if (!(t > 0)) throw std::invalid_argument("BesselTable: t must be positive");
    if (m_max < 0) throw std::invalid_argument("BesselTable: m_max must be >= 0");
    if (m_max > kMaxOrderBudget)
        throw std::invalid_argument("BesselTable: m_max exceeds the memory budget");

    BesselTable table;
    table.t_ = t;
    table.z_ = 2.0 * std::sqrt(t);
    const double z = table.z_;

    // start well past the turning point, where J decays super-exponentially
    const int start = std::max(m_max, static_cast<int>(std::ceil(z))) +
                      static_cast<int>(std::ceil(10.0 * std::cbrt(z))) + 50;
    std::vector<double>& v = table.values_;
    v.assign(static_cast<std::size_t>(start) + 1, 0.0);

    double next = 0.0;            // J~_{m+1}
    double cur = 1e-300;          // J~_{m} seed
    v[static_cast<std::size_t>(start)] = cur;
    for (int m = start; m > 0; --m) {
        double prev = (2.0 * m / z) * cur - next;
        next = cur;
        cur = prev;
        v[static_cast<std::size_t>(m) - 1] = cur;
        if (std::abs(cur) > kRescaleThreshold) {
            // rescale everything stored so far; the far tail underflows to 0,
            // which is where |J_m| < 1e-300 anyway
            for (int j = start; j >= m - 1; --j)
                v[static_cast<std::size_t>(j)] *= kRescaleFactor;
            cur *= kRescaleFactor;
            next *= kRescaleFactor;
        }
    }

    // even-order normalization, compensated sum
    double sum = 0.0, comp = 0.0;
    auto add = [&](double x) {
        double y = x - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    };
    add(v[0]);
    for (std::size_t m = 2; m < v.size(); m += 2) add(2.0 * v[m]);
    if (sum == 0.0 || !std::isfinite(sum))
        throw std::runtime_error("BesselTable: normalization failed");
    for (double& x : v) x /= sum;
    return table;
}

double BesselTable::normalization_residual() const {
    double sum = 0.0, comp = 0.0;
    auto add = [&](double x) {
        double y = x - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    };
    add(values_[0]);
    for (std::size_t m = 2; m < values_.size(); m += 2) add(2.0 * values_[m]);
    return std::abs(sum - 1.0);
}

}  // namespace plancherel
