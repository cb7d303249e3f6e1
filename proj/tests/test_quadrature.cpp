// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "expvol/detail/rng.hpp"
#include "expvol/errors.hpp"
#include "expvol/quadrature.hpp"
#include "oracles.hpp"

using namespace expvol;

namespace {
const double kSqrtPi = std::sqrt(std::numbers::pi);
const double kTwoK02 = static_cast<double>(oracles::bessel_J(0.0L, 1.0L)); // 2 K_0(2)
} // namespace

TEST_CASE("halfline: exact antiderivatives") {
    auto r = integrate_halfline(Fn1D([](double t) { return std::exp(-t); }), {});
    CHECK(std::fabs(r.value - 1.0) < 1e-10);
    auto r2 = integrate_halfline(Fn1D([](double t) { return t * std::exp(-t * t); }), {});
    CHECK(std::fabs(r2.value - 0.5) < 1e-10);
}

TEST_CASE("halfline: bessel kernel equals 2 K_0(2)") {
    auto r = integrate_halfline(
        Fn1D([](double t) { return std::exp(-(t + 1.0 / t)) / t; }), {});
    CHECK(std::fabs(r.value - kTwoK02) < 1e-8);
}

TEST_CASE("line: gaussian, odd integrand, cosh kernel") {
    auto g = integrate_line(Fn1D([](double x) { return std::exp(-x * x); }), {});
    CHECK(std::fabs(g.value - kSqrtPi) < 1e-10);

    auto odd = integrate_line(Fn1D([](double x) { return x * std::exp(-x * x); }), {});
    CHECK(std::fabs(odd.value) < 1e-10);

    // int exp(-2 cosh(l/2)) dl = 2 J_0(1): the l/2 substitution doubles the
    // 2K_0(2) value.
    auto c = integrate_line(
        Fn1D([](double l) { return std::exp(-(std::exp(0.5 * l) + std::exp(-0.5 * l))); }), {});
    CHECK(std::fabs(c.value - 2.0 * kTwoK02) < 1e-8);
}

TEST_CASE("box: products and moments") {
    const AxisDomain hh[2] = {AxisDomain::halfline, AxisDomain::halfline};
    auto r = integrate_box(
        [](std::span<const double> t) { return std::exp(-t[0] - t[1]); }, hh, {});
    CHECK(std::fabs(r.value - 1.0) < 1e-8);

    auto rb = integrate_box(
        [](std::span<const double> t) {
            return std::exp(-(t[0] + 1.0 / t[0]) - (t[1] + 1.0 / t[1])) / (t[0] * t[1]);
        },
        hh, {});
    CHECK(std::fabs(rb.value - kTwoK02 * kTwoK02) < 1e-7);

    auto rm = integrate_box(
        [](std::span<const double> t) { return t[0] * std::exp(-t[0] - t[1]); }, hh, {});
    CHECK(std::fabs(rm.value - 1.0) < 1e-8);

    const AxisDomain five[5] = {AxisDomain::line, AxisDomain::line, AxisDomain::line,
                                AxisDomain::line, AxisDomain::line};
    CHECK_THROWS_AS(integrate_box([](std::span<const double>) { return 1.0; }, five, {}),
                    param_error);
}

TEST_CASE("monte carlo: self-normalization, product kernel, zero") {
    QuadConfig cfg;
    const double inv_sqrt2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    McProposal normal2;
    normal2.dim = 2;
    normal2.sample = [](std::uint64_t i, std::span<double> out) {
        out[0] = detail::normal01(42, i, 0);
        out[1] = detail::normal01(42, i, 1);
    };
    normal2.density = [inv_sqrt2pi](std::span<const double> x) {
        return inv_sqrt2pi * inv_sqrt2pi * std::exp(-0.5 * (x[0] * x[0] + x[1] * x[1]));
    };

    SUBCASE("f = proposal density integrates to 1") {
        FnND f = [&](std::span<const double> x) { return normal2.density(x); };
        auto r = integrate_mc(f, normal2, 20000, cfg);
        CHECK(std::fabs(r.value - 1.0) <= std::max(3.0 * r.error_estimate, 1e-12));
    }
    SUBCASE("f = 0 gives exactly zero") {
        FnND f = [](std::span<const double>) { return 0.0; };
        auto r = integrate_mc(f, normal2, 1000, cfg);
        CHECK(r.value == 0.0);
        CHECK(r.error_estimate == 0.0);
    }
    SUBCASE("5-dim bessel product within 4 SE") {
        McProposal lognormal5;
        lognormal5.dim = 5;
        lognormal5.sample = [](std::uint64_t i, std::span<double> out) {
            for (std::size_t d = 0; d < 5; ++d) out[d] = detail::normal01(7, i, d);
        };
        lognormal5.density = [inv_sqrt2pi](std::span<const double> x) {
            double q = 1.0;
            for (std::size_t d = 0; d < 5; ++d)
                q *= inv_sqrt2pi * std::exp(-0.5 * x[d] * x[d]);
            return q;
        };
        // integrand after u = log t: exp(-sum(e^u + e^-u))
        FnND f = [](std::span<const double> u) {
            double w = 0.0;
            for (std::size_t d = 0; d < 5; ++d) w += std::exp(u[d]) + std::exp(-u[d]);
            return std::exp(-w);
        };
        auto r = integrate_mc(f, lognormal5, 400000, cfg);
        const double truth = std::pow(kTwoK02, 5.0);
        CHECK(std::fabs(r.value - truth) <= 4.0 * r.error_estimate);
        CHECK(r.error_estimate < 0.05 * truth);
    }
}

TEST_CASE("monte carlo rejects vanishing proposal density") {
    McProposal bad;
    bad.dim = 1;
    bad.sample = [](std::uint64_t i, std::span<double> out) {
        out[0] = static_cast<double>(i % 7) - 3.0;
    };
    bad.density = [](std::span<const double> x) { return x[0] > 0.0 ? 1.0 : 0.0; };
    FnND f = [](std::span<const double>) { return 1.0; };
    CHECK_THROWS_AS(integrate_mc(f, bad, 100, {}), eval_error);
}

TEST_CASE("error paths: nan integrand, unreachable tolerance") {
    CHECK_THROWS_AS(
        integrate_line(Fn1D([](double x) { return x == 0.0 ? 1.0 : std::nan(""); }), {}),
        eval_error);

    QuadConfig tight;
    tight.abs_tol = 1e-300;
    tight.rel_tol = 1e-300;
    tight.max_subdivisions = 1;
    bool caught = false;
    try {
        integrate_line(Fn1D([](double x) { return std::exp(-x * x) * std::cos(40.0 * x); }),
                       tight);
    } catch (const convergence_error& e) {
        caught = true;
        CHECK(std::isfinite(e.best_estimate));
        CHECK(e.error_estimate > 0.0);
    }
    CHECK(caught);
}

TEST_CASE("linearity and positivity") {
    QuadConfig cfg;
    auto f = Fn1D([](double t) { return std::exp(-t); });
    auto g = Fn1D([](double t) { return t * std::exp(-t); });
    auto fg = Fn1D([](double t) { return 2.0 * std::exp(-t) + 3.0 * t * std::exp(-t); });
    const double vf = integrate_halfline(f, cfg).value;
    const double vg = integrate_halfline(g, cfg).value;
    const auto vfg = integrate_halfline(fg, cfg);
    CHECK(std::fabs(vfg.value - (2.0 * vf + 3.0 * vg)) <
          10.0 * (vfg.error_estimate + 1e-12));
    CHECK(vf >= 0.0);
    CHECK(vg >= 0.0);
}

TEST_CASE("batched integrands agree with scalar path") {
    Fn1D scalar([](double u) { return std::exp(-2.0 * std::cosh(u)); });
    Fn1D batched([](double u) { return std::exp(-2.0 * std::cosh(u)); },
                 [](const double* u, double* y, std::size_t n) {
                     for (std::size_t i = 0; i < n; ++i)
                         y[i] = std::exp(-2.0 * std::cosh(u[i]));
                 });
    const double a = integrate_line(scalar, {}).value;
    const double b = integrate_line(batched, {}).value;
    CHECK(a == doctest::Approx(b).epsilon(1e-13));
}
