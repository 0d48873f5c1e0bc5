#pragma once

// Integer-order Bessel values J_m(2 sqrt(t)) for a whole range of orders at a
// fixed argument, by Miller backward recurrence normalized through the
// even-order identity J_0 + 2 sum_k J_{2k} = 1.

#include <vector>

namespace plancherel {

class BesselTable {
public:
    /// Builds values for orders 0..max(m_max, start overhead); accurate to
    /// ~1e-10 relative for every |J_m| > 1e-300.
    static BesselTable build(double t, int m_max);

    double t() const noexcept { return t_; }
    double argument() const noexcept { return z_; }  // 2 sqrt(t)
    int max_order() const noexcept { return static_cast<int>(values_.size()) - 1; }

    /// J_m for any integer m: reflection J_{-m} = (-1)^m J_m; 0 beyond the
    /// table (the tail is below 1e-300 by construction).
    double value(long long m) const noexcept {
        long long a = m < 0 ? -m : m;
        if (a >= static_cast<long long>(values_.size())) return 0.0;
        double v = values_[static_cast<std::size_t>(a)];
        return (m < 0 && (a & 1)) ? -v : v;
    }

    /// |J_0 + 2 sum J_{2k} - 1| recomputed from the stored values.
    double normalization_residual() const;

private:
    double t_ = 0;
    double z_ = 0;
    std::vector<double> values_;
};

}  // namespace plancherel
