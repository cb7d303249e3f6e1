// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include <doctest.h>

#include <cmath>
#include <vector>

#include "expvol/bessel.hpp"
#include "expvol/crown.hpp"
#include "expvol/errors.hpp"
#include "oracles.hpp"

using namespace expvol;

TEST_CASE("n = 1 closed form") {
    const std::vector<double> K{1.0};
    CHECK(crown_volume(1, K, 1.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(crown_volume(1, K, 1.0) == doctest::Approx(0.135335).epsilon(1e-5));
    const double lam = std::exp(1.3);
    CHECK(crown_volume(1, K, lam) ==
          doctest::Approx(std::exp(-(std::sqrt(lam) + 1.0 / std::sqrt(lam)))).epsilon(1e-14));
}

TEST_CASE("n = 2 equals the closed Bessel form") {
    const std::vector<double> K{1.0, 1.0};
    const double direct = crown_volume(2, K, 1.0);
    const double truth = static_cast<double>(oracles::bessel_J(0.0L, 4.0L)); // J_0(4)
    CHECK(direct == doctest::Approx(truth).epsilon(1e-8));

    // a couple of asymmetric points
    for (double l : {0.0, 1.1}) {
        const std::vector<double> K2{0.6, 2.3};
        const double arg = K2[0] + K2[1] +
                           std::sqrt(K2[0] * K2[1]) * (std::exp(0.5 * l) + std::exp(-0.5 * l));
        const double want = static_cast<double>(oracles::bessel_J(0.0L, arg));
        CHECK(crown_volume(2, K2, std::exp(l)) == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("cyclic relabeling invariance") {
    const std::vector<double> K{0.5, 1.5, 2.5};
    const std::vector<double> Krot{1.5, 2.5, 0.5};
    const double lam = std::exp(0.7);
    CHECK(crown_volume(3, K, lam) == doctest::Approx(crown_volume(3, Krot, lam)).epsilon(1e-8));
}

TEST_CASE("n = 3 volume: bound and Monte-Carlo agreement") {
    const std::vector<double> K{1.0, 1.0, 1.0};
    const double v = crown_volume(3, K, 1.0);
    const double j01 = static_cast<double>(oracles::bessel_J(0.0L, 1.0L));
    CHECK(v > 0.0);
    CHECK(v < 2.0 * j01 * j01);

    // full-line moment k = 0: nested vs Monte-Carlo
    QuadConfig cfg;
    cfg.mc_samples = 400000;
    const double nested = crown_signed_moment(3, K, 0.0, 0, cfg);
    const auto mc = detail::crown_laplace_moment_mc(3, K, 0.0, 0, false, cfg);
    CHECK(std::fabs(nested - mc.value) <= 4.0 * mc.error_estimate);
}

TEST_CASE("half-line moment n = 1, k = 1: oracle and B-integral identity") {
    const std::vector<double> K{1.0};
    const double m = crown_moment_halfline(1, K, 1);
    const double truth = static_cast<double>(oracles::halfline_cosh_moment(1.0L, 1.0L, 1));
    CHECK(m == doctest::Approx(truth).epsilon(1e-8));
    CHECK(m > 0.0);
    // 4 |int_0^1 e^{-(B+1/B)} log B dB/B|, the paper-side expression with the
    // orientation fixed
    Fn1D g([](double b) {
        return b < 1.0 ? std::exp(-(b + 1.0 / b)) * std::log(b) / b : 0.0;
    });
    const double b_integral = integrate_halfline(g, {}).value;
    CHECK(m == doctest::Approx(-4.0 * b_integral).epsilon(1e-7));
}

TEST_CASE("half-line moment n = 2, k = 0 vs 1-D integral of the closed form") {
    const std::vector<double> K{1.0, 1.0};
    const double direct = crown_moment_halfline(2, K, 0);
    Fn1D g([](double l) {
        const double arg = 2.0 + std::exp(0.5 * l) + std::exp(-0.5 * l);
        return static_cast<double>(oracles::bessel_J(0.0L, static_cast<long double>(arg)));
    });
    const double oracle = integrate_halfline(g, {}).value;
    CHECK(direct == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("half-line moments stay under the proof bound") {
    for (int n : {1, 2, 3}) {
        std::vector<double> K;
        for (int i = 0; i < n; ++i) K.push_back(0.5 + 0.7 * i);
        for (int k : {0, 1, 2, 3}) {
            const double m = crown_moment_halfline(n, K, k);
            CHECK(std::isfinite(m));
            double kfact = 1.0;
            for (int i = 2; i <= k; ++i) kfact *= i;
            double prod_k = 1.0;
            for (double kk : K) prod_k *= kk;
            double bound = std::pow(2.0, k + 2) * kfact * std::sqrt(prod_k) / K.back();
            for (int i = 0; i + 1 < n; ++i)
                bound *= bessel_J(1.0, K[static_cast<std::size_t>(i)]) /
                         std::sqrt(K[static_cast<std::size_t>(i)]);
            CHECK(std::fabs(m) < bound);
        }
    }
}

TEST_CASE("signed moments: product formula and parity") {
    SUBCASE("k = 0 is the Bessel product") {
        const std::vector<double> K{1.0};
        CHECK(crown_signed_moment(1, K, 0.8, 0) ==
              doctest::Approx(2.0 * bessel_J(0.8, 1.0)).epsilon(1e-8));
        const std::vector<double> K2{0.7, 1.4};
        CHECK(crown_signed_moment(2, K2, 0.5, 0) ==
              doctest::Approx(2.0 * bessel_J(0.5, 0.7) * bessel_J(0.5, 1.4)).epsilon(1e-6));
    }
    SUBCASE("odd moment vanishes at s = 0") {
        const std::vector<double> K{1.0, 1.0};
        CHECK(std::fabs(crown_signed_moment(2, K, 0.0, 1)) < 1e-9);
    }
}

TEST_CASE("monte-carlo route for dimensions above the cutoff") {
    QuadConfig cfg;
    cfg.nested_dim_cutoff = 4;
    cfg.mc_samples = 500000;
    std::vector<double> K{1.0, 1.0, 1.0, 1.0, 1.0};
    const double v = crown_signed_moment(5, K, 0.0, 0, cfg); // routed to MC
    const double j01 = static_cast<double>(oracles::bessel_J(0.0L, 1.0L));
    const double truth = 2.0 * std::pow(j01, 5.0);
    const auto mc = detail::crown_laplace_moment_mc(5, K, 0.0, 0, false, cfg);
    CHECK(std::fabs(v - truth) <= 5.0 * mc.error_estimate);
}

TEST_CASE("parameter errors") {
    const std::vector<double> K{1.0};
    CHECK_THROWS_AS(crown_volume(0, {}, 1.0), param_error);
    CHECK_THROWS_AS(crown_volume(1, K, 0.0), param_error);
    const std::vector<double> bad{-1.0};
    CHECK_THROWS_AS(crown_volume(1, bad, 1.0), param_error);
    CHECK_THROWS_AS(crown_moment_halfline(1, K, -1), param_error);
    const std::vector<double> K2{1.0, 2.0};
    CHECK_THROWS_AS(crown_volume(1, K2, 1.0), param_error);
}
