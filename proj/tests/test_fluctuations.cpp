#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "plancherel/fluctuations.hpp"
#include "plancherel/quadrature.hpp"
#include "plancherel/rng.hpp"
#include "plancherel/samplers.hpp"

using namespace plancherel;

TEST_CASE("delta_vertical at the edges and on the deterministic staircase") {
    RandomStream stream(71, 0);
    auto lambda = sample_plancherel_rsk(400, stream);
    // Delta_n(0) = lambda_1 - 2 sqrt(n)
    CHECK(delta_vertical(lambda, 400, 0.0) ==
          doctest::Approx(lambda.part(1) - 2.0 * 20.0).epsilon(1e-12));

    // staircase built from the limit shape stays within one cell of it
    const long long n = 2500;
    const double root_n = 50.0;
    std::vector<int> parts;
    for (long long i = 1;; ++i) {
        int v = static_cast<int>(std::ceil(root_n * omega(std::min(2.0, i / root_n))));
        if (v <= 0) break;
        parts.push_back(v);
    }
    auto stair = Partition::unchecked(parts);
    for (int i = 1; i <= 110; ++i) {
        double x = i / root_n;
        if (x >= 2.0) break;
        // grid points evaluated with exact lattice indexing
        CHECK(std::abs(static_cast<double>(profile_at_index(stair, i)) -
                       root_n * omega(x)) <= 1.0 + 1e-9);
    }

    CHECK_THROWS_AS(delta_vertical(lambda, 400, 2.1), std::invalid_argument);
    CHECK_THROWS_AS(delta_vertical(lambda, 400, -0.5), std::invalid_argument);
}

TEST_CASE("delta lattice membership is exact") {
    RandomStream stream(72, 0);
    const long long n = 1000;
    const double root_n = std::sqrt(1000.0);
    for (int rep = 0; rep < 50; ++rep) {
        auto lambda = sample_plancherel_rsk(n, stream);
        double x = 0.1 + 1.8 * stream.next_unit();
        double delta = delta_vertical(lambda, n, x);
        long long k = static_cast<long long>(std::ceil(root_n * x));
        // delta equals the integer profile value minus the fixed shift
        CHECK(delta == static_cast<double>(profile_at_index(lambda, k)) - root_n * omega(x));
    }
}

TEST_CASE("y_vertical scaling") {
    RandomStream stream(73, 0);
    auto lambda = sample_plancherel_rsk(100, stream);
    double x = 1.3;
    double delta = delta_vertical(lambda, 100, x);
    double y = y_vertical(lambda, 100, x);
    CHECK(y == doctest::Approx(2.0 * theta_of_x(x) * delta / std::sqrt(std::log(100.0))));
    if (delta != 0.0) CHECK(y / delta == doctest::Approx(2.0 * theta_of_x(x) / std::sqrt(std::log(100.0))));
    CHECK_THROWS_AS(y_vertical(lambda, 2, x), std::invalid_argument);
    CHECK_THROWS_AS(y_vertical(lambda, 100, 2.0), std::invalid_argument);
}

TEST_CASE("delta_rotated") {
    // single cell at n = 1: rotated profile at u = 0 sits at 2, Omega(0) = 4/pi
    RotatedProfile one(make_partition({1}), 1.0);
    CHECK(delta_rotated(one, 1, 0.0) ==
          doctest::Approx(2.0 - 4.0 / std::numbers::pi).epsilon(1e-12));

    // beyond both supports the deviation vanishes exactly
    RandomStream stream(74, 0);
    auto lambda = sample_plancherel_rsk(50, stream);
    RotatedProfile profile(lambda, std::sqrt(50.0));
    double far = std::max(2.0, std::abs(profile.support_min()) + 0.6);
    CHECK(delta_rotated(profile, 50, far + 0.5) == 0.0);
    CHECK(delta_rotated(profile, 50, -far - 0.3) == 0.0);

    double y = y_rotated(profile, 50, 0.4);
    CHECK(y == doctest::Approx(std::numbers::pi * delta_rotated(profile, 50, 0.4) /
                               std::sqrt(std::log(50.0))));
}

TEST_CASE("chebyshev_u") {
    for (double u : {-1.9, -0.4, 0.0, 1.2})
        CHECK(chebyshev_u(0, u) == 1.0);
    for (double u : {-1.5, 0.3, 1.9})
        CHECK(chebyshev_u(1, u) == u);
    for (double u : {-1.5, 0.0, 0.7})
        CHECK(chebyshev_u(2, u) == doctest::Approx(u * u - 1.0).epsilon(1e-14));
    CHECK_THROWS_AS(chebyshev_u(3, 2.5), std::invalid_argument);

    // trigonometric definition U_k(2 cos a) = sin((k+1) a) / sin(a)
    RandomStream stream(75, 0);
    for (int rep = 0; rep < 200; ++rep) {
        int k = static_cast<int>(stream.next_below(12));
        double a = 0.05 + (std::numbers::pi - 0.1) * stream.next_unit();
        CHECK(chebyshev_u(k, 2.0 * std::cos(a)) ==
              doctest::Approx(std::sin((k + 1) * a) / std::sin(a)).epsilon(1e-9));
    }
}

TEST_CASE("kerov functional: k = 1 vanishes (area identity)") {
    RandomStream stream(76, 0);
    for (long long n : {1LL, 7LL, 60LL, 400LL}) {
        auto lambda = sample_plancherel_rsk(n, stream);
        RotatedProfile profile(lambda, std::sqrt(static_cast<double>(n)));
        CHECK(std::abs(kerov_functional(profile, n, 1)) <= 1e-8);
    }
}

TEST_CASE("kerov functional: empty partition gives 0 for all k") {
    RotatedProfile flat(Partition{}, 1.0);
    for (int k = 1; k <= 6; ++k)
        CHECK(kerov_functional(flat, 0, k) == 0.0);
}

TEST_CASE("kerov functional agrees with brute-force quadrature") {
    RandomStream stream(77, 0);
    const long long n = 50;
    for (int rep = 0; rep < 5; ++rep) {
        auto lambda = sample_plancherel_rsk(n, stream);
        RotatedProfile profile(lambda, std::sqrt(static_cast<double>(n)));
        double lim = std::max(2.0, std::max(std::abs(profile.support_min()),
                                            profile.support_max())) + 0.1;
        for (int k = 1; k <= 5; ++k) {
            double direct = integrate_adaptive(
                [&](double u) {
                    double poly = k == 1 ? 1.0 : 0.0;
                    if (k > 1) {
                        double prev = 1.0, cur = u;
                        for (int i = 2; i < k; ++i) {
                            double next = u * cur - prev;
                            prev = cur;
                            cur = next;
                        }
                        poly = cur;
                    }
                    return delta_rotated(profile, n, u) * poly;
                },
                -lim, lim, 1e-9);
            CHECK(kerov_functional(profile, n, k) ==
                  doctest::Approx(direct).epsilon(1e-6));
        }
    }
}

TEST_CASE("count_interval") {
    // whenever the interval stays right of the tail, the empty partition
    // contributes nothing
    CHECK(count_interval(Partition{}, 1.0, 1.0, 0.0) == 0);
    CHECK(count_interval(Partition{}, 5.0, 0.5, 0.0) == 0);
    // at x = 1, t = 5 the interval reaches -1.47 and picks up the tail
    // point -1 of D(empty)
    CHECK(interval_left_end(5.0, 1.0, 0.0) == -1);
    CHECK(count_interval(Partition{}, 5.0, 1.0, 0.0) == 1);

    // exact reduction of the profile event to the counting event:
    // lambda_K - K <= c  <=>  #(D ∩ (c, inf)) < K, with K = ceil(sqrt(t) x)
    RandomStream stream(78, 0);
    const double t = 50.0;
    for (int rep = 0; rep < 1000; ++rep) {
        auto lambda = sample_poissonized(t, stream);
        double x = 0.3 + 1.4 * stream.next_unit();
        double z = 2.0 * stream.next_unit() - 1.0;
        double c = interval_threshold(t, x, z);
        long long k = static_cast<long long>(std::ceil(std::sqrt(t) * x));
        long long strict_left = static_cast<long long>(std::floor(c)) + 1;
        bool profile_event =
            static_cast<double>(profile_at_index(lambda, k) - k) <= c;
        bool count_event = count_frobenius_at_least(lambda, strict_left) < k;
        CHECK(profile_event == count_event);
    }
}
