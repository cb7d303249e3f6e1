// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include <doctest.h>

#include <cmath>

#include "expvol/bessel.hpp"
#include "expvol/errors.hpp"
#include "expvol/quadrature.hpp"
#include "oracles.hpp"

using namespace expvol;

TEST_CASE("J_0(1) = 2 K_0(2)") {
    const double truth = static_cast<double>(oracles::bessel_J(0.0L, 1.0L));
    CHECK(bessel_J(0.0, 1.0) == doctest::Approx(truth).epsilon(1e-10));
    // frozen digits for the record
    CHECK(truth == doctest::Approx(0.2277877).epsilon(1e-6));
}

TEST_CASE("bessel_K against the trapezoid oracle") {
    for (double nu : {0.0, 0.5, 1.0, 1.3, 2.0, 2.7}) {
        for (double x : {0.2, 0.9, 2.0, 5.0, 9.5, 10.5, 14.0, 25.0}) {
            const double truth = static_cast<double>(
                oracles::bessel_K(static_cast<long double>(nu), static_cast<long double>(x)));
            CHECK(bessel_K(nu, x) == doctest::Approx(truth).epsilon(5e-9));
        }
    }
}

TEST_CASE("series and asymptotic branches agree through the overlap") {
    for (double nu : {0.0, 0.8, 1.5, 2.5}) {
        for (double x : {8.0, 9.0, 10.0, 11.0, 12.0}) {
            const long double a = detail::bessel_K_series(nu, x);
            const long double b = detail::bessel_K_asymptotic(nu, x);
            const double rel = static_cast<double>(fabsl(a - b) / a);
            // the asymptotic truncation error improves like e^{-2x}; the
            // series loses digits to reflection cancellation as x grows
            const double budget = x < 9.5 ? 5e-7 : 2e-8;
            CHECK(rel < budget);
        }
    }
}

TEST_CASE("parity in s over the grid") {
    for (double s : {0.4, 1.0, 1.7, 2.3, 3.0}) {
        for (double z : {0.1, 0.7, 2.0, 5.5, 10.0}) {
            const double plus = bessel_J(s, z);
            const double minus = bessel_J(-s, z);
            CHECK(std::fabs(plus - minus) < 1e-9 * plus);
        }
    }
}

TEST_CASE("second integral form of the kernel") {
    // J_s(z) = z^{-s/2} int_0^inf exp(-t - z/t) t^s dt/t at (s, z) = (0.5, 2)
    const double s = 0.5, z = 2.0;
    auto r = integrate_halfline(
        Fn1D([=](double t) { return std::exp(-t - z / t) * std::pow(t, s) / t; }), {});
    const double rhs = std::pow(z, -0.5 * s) * r.value;
    CHECK(bessel_J(s, z) == doctest::Approx(rhs).epsilon(1e-9));
}

TEST_CASE("log-moments") {
    SUBCASE("k = 0 reduces to the kernel") {
        CHECK(bessel_J_logmoment(0.7, 1.3, 0) ==
              doctest::Approx(bessel_J(0.7, 1.3)).epsilon(1e-12));
    }
    SUBCASE("odd moments vanish at s = 0") {
        CHECK(std::fabs(bessel_J_logmoment(0.0, 1.0, 1)) < 1e-12);
        CHECK(std::fabs(bessel_J_logmoment(0.0, 2.5, 3)) < 1e-12);
    }
    SUBCASE("first and second derivatives vs central differences") {
        const double s = 0.5, z = 1.0, h = 1e-4;
        const double fd1 = (bessel_J(s + h, z) - bessel_J(s - h, z)) / (2.0 * h);
        CHECK(std::fabs(bessel_J_logmoment(s, z, 1) - fd1) < 1e-6);
        const double fd2 =
            (bessel_J(s + h, z) - 2.0 * bessel_J(s, z) + bessel_J(s - h, z)) / (h * h);
        const double m2 = bessel_J_logmoment(s, z, 2);
        CHECK(std::fabs(m2 - fd2) < 1e-5 * std::max(1.0, std::fabs(m2)));
    }
}

TEST_CASE("monotonicity of J_0") {
    double prev = bessel_J(0.0, 0.1);
    for (double z : {0.3, 0.8, 1.5, 3.0, 6.0, 10.0}) {
        const double cur = bessel_J(0.0, z);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("bessel_product") {
    const double j1 = bessel_J(0.0, 1.0);
    const double ks1[1] = {1.0};
    CHECK(bessel_product(0.0, ks1) == doctest::Approx(j1).epsilon(1e-12));
    const double ks2[2] = {1.0, 1.0};
    CHECK(bessel_product(0.0, ks2) == doctest::Approx(j1 * j1).epsilon(1e-12));
    CHECK(bessel_product(0.0, ks2) == doctest::Approx(0.0518873).epsilon(1e-4));
    const double ks3[2] = {0.3, 2.1};
    CHECK(bessel_product(1.1, ks3) == doctest::Approx(bessel_product(-1.1, ks3)).epsilon(1e-9));
    CHECK(bessel_product(0.7, {}) == 1.0);
}

TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(bessel_J(0.0, 0.0), param_error);
    CHECK_THROWS_AS(bessel_J(0.0, -1.0), param_error);
    CHECK_THROWS_AS(bessel_J_logmoment(0.0, 1.0, -1), param_error);
    CHECK_THROWS_AS(bessel_K(0.0, 0.0), param_error);
}
