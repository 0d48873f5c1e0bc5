#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "plancherel/kerov.hpp"
#include "plancherel/quadrature.hpp"
#include "plancherel/rng.hpp"
#include "plancherel/stats.hpp"

using namespace plancherel;

TEST_CASE("normal_cdf basics") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
    for (double z : {-3.7, -1.2, 0.3, 2.9})
        CHECK(normal_cdf(z) + normal_cdf(-z) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normal_cdf quantile cross-checks") {
    // root of Phi(z) = 0.975 by bisection on the implementation itself
    double lo = 0, hi = 4;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (normal_cdf(mid) < 0.975 ? lo : hi) = mid;
    }
    CHECK(0.5 * (lo + hi) == doctest::Approx(1.959964).epsilon(1e-5));

    // quadrature of the density as an independent oracle
    double integral = integrate_adaptive([](double s) { return normal_pdf(s); }, 0.0,
                                         1.959964, 1e-11);
    CHECK(0.5 + integral == doctest::Approx(normal_cdf(1.959964)).epsilon(1e-9));
}

TEST_CASE("regularized incomplete gamma against quadrature") {
    // P(a, x) = int_0^x s^(a-1) e^-s ds / Gamma(a); the substitution s = q^2
    // keeps the integrand smooth at the a = 1/2 endpoint
    for (double a : {0.5, 1.0, 2.5, 7.0})
        for (double x : {0.2, 1.0, 3.0, 11.0}) {
            double direct = integrate_adaptive(
                                [a](double q) {
                                    return 2.0 * std::pow(q, 2.0 * a - 1.0) *
                                           std::exp(-q * q);
                                },
                                0.0, std::sqrt(x), 1e-12) /
                            std::tgamma(a);
            CHECK(regularized_gamma_p(a, x) == doctest::Approx(direct).epsilon(1e-8));
            CHECK(regularized_gamma_p(a, x) + regularized_gamma_q(a, x) ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
}

TEST_CASE("chi2_sf sanity") {
    // dof = 2: survival is exp(-x/2)
    for (double x : {0.5, 2.0, 9.0})
        CHECK(chi2_sf(x, 2) == doctest::Approx(std::exp(-x / 2.0)).epsilon(1e-12));
    CHECK(chi2_sf(0.0, 5) == 1.0);
}

TEST_CASE("chi2_gof hand examples") {
    // observed exactly proportional to expected
    std::vector<std::uint64_t> obs = {60, 40};
    std::vector<double> expected = {0.6, 0.4};
    auto r0 = chi2_gof(obs, expected);
    CHECK(r0.statistic == doctest::Approx(0.0));
    CHECK(r0.p_value == doctest::Approx(1.0));

    // uniform 2-cell with observed (60, 40): statistic 4.0
    std::vector<double> uniform = {0.5, 0.5};
    auto r1 = chi2_gof(obs, uniform);
    CHECK(r1.statistic == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(r1.dof == 1);

    std::vector<std::uint64_t> single = {10};
    std::vector<double> one = {1.0};
    CHECK_THROWS_AS(chi2_gof(single, one), std::invalid_argument);

    std::vector<double> bad = {0.7, 0.7};
    CHECK_THROWS_AS(chi2_gof(obs, bad), std::invalid_argument);
}

TEST_CASE("chi2_gof pools light cells") {
    // 12 cells with tiny tail probabilities collapse into a few pooled cells
    std::vector<double> probs(12, 0.0);
    probs[0] = 0.5;
    probs[1] = 0.4;
    for (int i = 2; i < 12; ++i) probs[static_cast<std::size_t>(i)] = 0.01;
    std::vector<std::uint64_t> obs(12, 0);
    obs[0] = 53;
    obs[1] = 38;
    for (int i = 2; i < 12; ++i) obs[static_cast<std::size_t>(i)] = 1;
    auto r = chi2_gof(obs, probs);
    CHECK(r.cells == 4);  // 0.5 | 0.4 | two pooled groups of five 0.01 cells
    CHECK(r.p_value > 0.1);
}

TEST_CASE("ks_statistic") {
    // two-point sample {-1, 1} against Phi
    double d_expected = std::max({normal_cdf(-1.0), 0.5 - normal_cdf(-1.0),
                                  normal_cdf(1.0) - 0.5, 1.0 - normal_cdf(1.0)});
    CHECK(ks_statistic({-1.0, 1.0}, normal_cdf) ==
          doctest::Approx(d_expected).epsilon(1e-12));

    // single atom at 0 against a step CDF at 0
    auto step = [](double v) { return v < 0 ? 0.0 : 1.0; };
    CHECK(ks_statistic({0.0}, step) == doctest::Approx(0.0));

    CHECK_THROWS_AS(ks_statistic({}, normal_cdf), std::invalid_argument);
}

TEST_CASE("ks of the s = 1 limit vector sampler against Phi") {
    auto spec = GaussianVectorSpec::make({1.0});
    std::vector<double> draws;
    draws.reserve(100000);
    for (int r = 0; r < 100000; ++r) {
        RandomStream stream(314, static_cast<std::uint64_t>(r));
        draws.push_back(sample_limit_vector(spec, stream)[0]);
    }
    CHECK(ks_statistic(std::move(draws), normal_cdf) <= 0.01);
}

TEST_CASE("two-sample ks") {
    std::vector<double> a, b;
    RandomStream stream(99, 0);
    for (int i = 0; i < 4000; ++i) {
        a.push_back(stream.next_normal());
        b.push_back(stream.next_normal());
    }
    CHECK(ks_two_sample(a, b) < 0.05);
    for (auto& v : b) v += 3.0;
    CHECK(ks_two_sample(a, b) > 0.8);
}

TEST_CASE("moments of a known sample") {
    std::vector<double> v = {1, 1, 1, 5};
    auto m = compute_moments(v);
    CHECK(m.mean == doctest::Approx(2.0));
    CHECK(m.variance == doctest::Approx(4.0));  // unbiased: 12/3
    CHECK(m.skewness == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(m.count == 4);
}

TEST_CASE("empirical_cov") {
    RandomStream stream(5, 0);
    std::vector<std::pair<double, double>> same, indep;
    for (int i = 0; i < 5000; ++i) {
        double z = stream.next_normal();
        same.emplace_back(z, z);
        indep.emplace_back(stream.next_normal(), stream.next_normal());
    }
    std::vector<double> firsts;
    for (auto& p : same) firsts.push_back(p.first);
    auto est_same = empirical_cov(same);
    CHECK(est_same.covariance == doctest::Approx(compute_moments(firsts).variance));
    auto est_ind = empirical_cov(indep);
    CHECK(std::abs(est_ind.covariance) <= 3.0 * est_ind.std_error);

    std::vector<std::pair<double, double>> few(5, {0.0, 0.0});
    CHECK_THROWS_AS(empirical_cov(few), std::invalid_argument);
}

TEST_CASE("lattice gof accepts a discretized normal and rejects a shifted mix") {
    std::vector<long long> good;
    for (int r = 0; r < 20000; ++r) {
        RandomStream stream(77, static_cast<std::uint64_t>(r));
        good.push_back(std::llround(3.0 * stream.next_normal() + 0.37));
    }
    auto pass = lattice_normal_gof(good);
    CHECK(pass.chi2.p_value > 1e-3);
    CHECK(pass.fitted_sd == doctest::Approx(3.0).epsilon(0.05));

    std::vector<long long> bad;
    for (int r = 0; r < 20000; ++r) {
        RandomStream stream(78, static_cast<std::uint64_t>(r));
        double z = stream.next_normal();
        bad.push_back(std::llround(r % 2 ? 3.0 * z + 6.0 : 3.0 * z - 6.0));
    }
    CHECK(lattice_normal_gof(bad).chi2.p_value < 1e-6);
}

TEST_CASE("pearson correlation") {
    std::vector<double> a = {1, 2, 3, 4}, b = {2, 4, 6, 8}, c = {4, 3, 2, 1};
    CHECK(pearson_correlation(a, b) == doctest::Approx(1.0));
    CHECK(pearson_correlation(a, c) == doctest::Approx(-1.0));
}
