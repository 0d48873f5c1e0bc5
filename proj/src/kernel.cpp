#include "plancherel/kernel.hpp"

#include <Eigen/Dense>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "plancherel/fluctuations.hpp"
#include "plancherel/limit_shape.hpp"

namespace plancherel {

double kernel_value(long long x, long long y, const BesselTable& table) {
    if (x == y) return kernel_diagonal(x, table);
    double num = table.value(x) * table.value(y + 1) - table.value(x + 1) * table.value(y);
    return std::sqrt(table.t()) * num / static_cast<double>(x - y);
}

double kernel_diagonal(long long x, const BesselTable& table) {
    // compensated sum of J_{x+s}^2, s >= 1, until the table tail
    double sum = 0.0, comp = 0.0;
    const long long top = table.max_order();
    for (long long m = x + 1; m <= top; ++m) {
        double j = table.value(m);
        double term = j * j;
        double yv = term - comp;
        double s = sum + yv;
        comp = (s - sum) - yv;
        sum = s;
    }
    return sum;
}

double correlation_rho(std::span<const long long> points, const BesselTable& table) {
    const auto k = points.size();
    if (k == 0) throw std::invalid_argument("correlation_rho: needs at least one point");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("correlation_rho: points must be distinct");
    Eigen::MatrixXd m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
            kernel_diagonal(points[i], table);
        for (std::size_t j = i + 1; j < k; ++j) {
            double v = kernel_value(points[i], points[j], table);
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
            m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
        }
    }
    return m.fullPivLu().determinant();
}

namespace {

struct Window {
    long long lo = 0, hi = 0;  // inclusive integer orders
    std::vector<double> j;     // J_m for m in [lo-1, hi+1]
    std::vector<double> diag;  // kernel_diagonal(m) for m in [lo, hi]
    double tail = 0.0;         // sum of diag beyond hi

    double jat(long long m) const { return j[static_cast<std::size_t>(m - lo + 1)]; }
    double dat(long long m) const { return diag[static_cast<std::size_t>(m - lo)]; }
};

Window build_window(const BesselTable& table, long long lo, long long hi) {
    Window w;
    w.lo = lo;
    w.hi = hi;
    w.j.resize(static_cast<std::size_t>(hi - lo + 3));
    for (long long m = lo - 1; m <= hi + 1; ++m)
        w.j[static_cast<std::size_t>(m - lo + 1)] = table.value(m);
    // suffix sums of J^2 from the table top downwards give every diagonal in
    // one pass; also the tail mass sum_{m > hi} diag(m)
    const long long top = table.max_order();
    double suffix = 0.0, comp = 0.0;
    double tail = 0.0, tcomp = 0.0;
    w.diag.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (long long m = top; m > lo; --m) {
        double jv = table.value(m);
        double term = jv * jv;
        double y = term - comp;
        double s = suffix + y;
        comp = (s - suffix) - y;
        suffix = s;
        // suffix now equals sum_{q >= m} J_q^2 = diag(m - 1)
        long long q = m - 1;
        if (q >= lo && q <= hi) w.diag[static_cast<std::size_t>(q - lo)] = suffix;
        if (q > hi) {
            double y2 = suffix - tcomp;
            double s2 = tail + y2;
            tcomp = (s2 - tail) - y2;
            tail = s2;
        }
    }
    w.tail = tail;
    return w;
}

}  // namespace

KernelPrediction predict_counts(double t, double x, double z, int threads) {
    if (!(t >= 2)) throw std::invalid_argument("predict_counts: t must be >= 2");
    KernelPrediction out;
    out.t = t;
    out.x = x;
    out.z = z;
    const double theta = theta_of_x(x);
    out.lemma1_mean = std::sqrt(t) * x - (z * theta / std::numbers::pi) * std::sqrt(std::log(t));
    out.lemma1_variance = std::log(t) / (4.0 * std::numbers::pi * std::numbers::pi);
    out.interval_start = interval_left_end(t, x, z);

    const double zarg = 2.0 * std::sqrt(t);
    long long margin = static_cast<long long>(std::ceil(10.0 * std::pow(t, 1.0 / 6.0))) + 50;
    Window w;
    for (int attempt = 0;; ++attempt) {
        long long cutoff = static_cast<long long>(std::ceil(zarg)) + margin;
        BesselTable table = BesselTable::build(t, static_cast<int>(cutoff) + 2);
        w = build_window(table, out.interval_start, cutoff);
        if (w.tail < 1e-12) {
            out.cutoff = cutoff;
            out.tail_bound = w.tail;
            break;
        }
        if (attempt >= 3)
            throw std::runtime_error("predict_counts: tail bound not met within budget");
        margin *= 2;
    }

    // mean = sum of diagonals over the truncated interval
    double mean = 0.0, comp = 0.0;
    for (long long m = w.lo; m <= w.hi; ++m) {
        double y = w.dat(m) - comp;
        double s = mean + y;
        comp = (s - mean) - y;
        mean = s;
    }
    out.mean = mean;

    // variance = mean - sum_{x,y in I} J(x,y)^2, halved by symmetry; row
    // blocks run in parallel, the reduction order is fixed by block index
    const long long lo = w.lo, hi = w.hi;
    const double root_t = std::sqrt(t);
    auto row_sum = [&](long long xi) {
        double acc = 0.0, c2 = 0.0;
        const double jx = w.jat(xi), jx1 = w.jat(xi + 1);
        for (long long yi = xi + 1; yi <= hi; ++yi) {
            double num = root_t * (jx * w.jat(yi + 1) - jx1 * w.jat(yi));
            double v = num / static_cast<double>(xi - yi);
            double term = 2.0 * v * v;
            double yv = term - c2;
            double s = acc + yv;
            c2 = (s - acc) - yv;
            acc = s;
        }
        double d = w.dat(xi);
        return acc + d * d;
    };

    if (threads <= 1) {
        double total = 0.0, c3 = 0.0;
        for (long long xi = lo; xi <= hi; ++xi) {
            double yv = row_sum(xi) - c3;
            double s = total + yv;
            c3 = (s - total) - yv;
            total = s;
        }
        out.variance = mean - total;
    } else {
        const long long width = hi - lo + 1;
        const int nblocks = std::max(1, std::min<int>(threads * 8, static_cast<int>(std::min<long long>(width, 1024))));
        std::vector<double> block_sums(static_cast<std::size_t>(nblocks), 0.0);
        std::atomic<int> next{0};
        auto worker = [&] {
            while (true) {
                int b = next.fetch_add(1);
                if (b >= nblocks) return;
                long long b_lo = lo + width * b / nblocks;
                long long b_hi = lo + width * (b + 1) / nblocks - 1;
                double acc = 0.0, c3 = 0.0;
                for (long long xi = b_lo; xi <= b_hi; ++xi) {
                    double yv = row_sum(xi) - c3;
                    double s = acc + yv;
                    c3 = (s - acc) - yv;
                    acc = s;
                }
                block_sums[static_cast<std::size_t>(b)] = acc;
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        double total = 0.0, c3 = 0.0;
        for (double bsum : block_sums) {
            double yv = bsum - c3;
            double s = total + yv;
            c3 = (s - total) - yv;
            total = s;
        }
        out.variance = mean - total;
    }
    return out;
}

}  // namespace plancherel
