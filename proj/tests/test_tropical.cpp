// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include <doctest.h>

#include <cmath>
#include <vector>

#include "expvol/errors.hpp"
#include "expvol/polytope.hpp"
#include "expvol/tropical.hpp"

using namespace expvol;

namespace {

HPolytope unit_box(int dim) {
    HPolytope p;
    p.dim = dim;
    for (int i = 0; i < dim; ++i) {
        std::vector<double> up(static_cast<std::size_t>(dim), 0.0);
        up[static_cast<std::size_t>(i)] = 1.0;
        p.constraints.push_back({up, 1.0});
        std::vector<double> dn(static_cast<std::size_t>(dim), 0.0);
        dn[static_cast<std::size_t>(i)] = -1.0;
        p.constraints.push_back({dn, 0.0});
    }
    return p;
}

} // namespace

TEST_CASE("tropical crown volume") {
    const std::vector<double> k2{-1.0, -1.0};
    CHECK(tropical_crown_volume(k2) == 2.0);
    const std::vector<double> mixed{-1.0, 0.5};
    CHECK(tropical_crown_volume(mixed) == 0.0);
    const std::vector<double> zeros{0.0, 0.0, 0.0};
    CHECK(tropical_crown_volume(zeros) == 0.0);
    const std::vector<double> k3{-2.0, -0.5, -1.5};
    CHECK(tropical_crown_volume(k3) == doctest::Approx(2.0 * 2.0 * 0.5 * 1.5));
}

TEST_CASE("tropical crown moments: closed forms") {
    SUBCASE("n = 1: |kappa|^{d+1}/(d+1)") {
        for (int d : {0, 1, 2, 3}) {
            const std::vector<double> k{-1.5};
            CHECK(tropical_crown_moment(k, d) ==
                  doctest::Approx(std::pow(1.5, d + 1) / (d + 1)).epsilon(1e-14));
        }
    }
    SUBCASE("n = 2, d = 0: the moment is kappa_1 kappa_2") {
        const double cases[4][3] = {
            {-1.0, -1.0, 1.0}, {-2.0, -1.0, 2.0}, {-1.0, -2.0, 2.0}, {-1.0, -3.0, 3.0}};
        for (const auto& c : cases) {
            const std::vector<double> k{c[0], c[1]};
            CHECK(tropical_crown_moment(k, 0) == doctest::Approx(c[2]).epsilon(1e-14));
        }
    }
    SUBCASE("degenerate box gives zero") {
        const std::vector<double> k{-1.0, 0.0};
        CHECK(tropical_crown_moment(k, 0) == doctest::Approx(0.0));
        CHECK(tropical_crown_moment(k, 2) == doctest::Approx(0.0));
    }
    SUBCASE("symmetry under relabeling") {
        const std::vector<double> a{-1.0, -2.0, -0.5};
        const std::vector<double> b{-0.5, -1.0, -2.0};
        for (int d : {0, 1, 3})
            CHECK(tropical_crown_moment(a, d) ==
                  doctest::Approx(tropical_crown_moment(b, d)).epsilon(1e-13));
    }
}

TEST_CASE("moment homogeneity of degree n + d") {
    const std::vector<double> base{-1.0, -0.7};
    for (int d : {0, 1, 2}) {
        const double m1 = tropical_crown_moment(base, d);
        std::vector<double> scaled{-2.0, -1.4};
        const double m2 = tropical_crown_moment(scaled, d);
        CHECK(m2 == doctest::Approx(std::pow(2.0, 2 + d) * m1).epsilon(1e-12));
    }
    const std::vector<double> base3{-1.0, -0.5, -2.0};
    const double m1 = tropical_crown_moment(base3, 1);
    std::vector<double> scaled3{-3.0, -1.5, -6.0};
    CHECK(tropical_crown_moment(scaled3, 1) ==
          doctest::Approx(std::pow(3.0, 4) * m1).epsilon(1e-12));
}

TEST_CASE("exact moments match the Monte-Carlo polytope route") {
    const std::vector<double> k{-1.0, -0.5, -2.0};
    for (int d : {0, 1}) {
        const double exact = tropical_crown_moment(k, d);
        const auto poly = tropical_crown_moment_polytope(k);
        auto mc = polytope_integrate_mc(
            poly,
            [d](std::span<const double> x) {
                double w = 1.0;
                for (int i = 0; i < d; ++i) w *= x[2];
                return w;
            },
            400000, 99);
        CHECK(std::fabs(exact - mc.value) <= 4.0 * mc.error_estimate);
    }
}

TEST_CASE("fixed-length tropical fiber volume") {
    const std::vector<double> k{-1.0, -0.5};
    CHECK(tropical_crown_volume_fixed_length(k, 0.4) == doctest::Approx(0.5).epsilon(1e-14));
    const std::vector<double> k2{-1.0, -0.8};
    CHECK(tropical_crown_volume_fixed_length(k2, 1.2) == doctest::Approx(0.3).epsilon(1e-14));
    // integrating the fiber volume over l >= 0 recovers the d = 0 moment
    double acc = 0.0;
    const double h = 1e-3;
    for (int i = 0; i < 4000; ++i)
        acc += tropical_crown_volume_fixed_length(k, h * (i + 0.5)) * h;
    CHECK(acc == doctest::Approx(tropical_crown_moment(k, 0)).epsilon(1e-3));
}

TEST_CASE("tropical exp volume of the once crowned torus") {
    const DecoratedSurface torus{1, {1}};
    const std::vector<double> kappa{-1.0};
    const std::span<const double> spans[1] = {kappa};
    const double v = tropical_exp_volume(torus, spans);
    // C_S (1/12) moment(kappa, 3) with moment = |kappa|^4/4
    CHECK(v == doctest::Approx(0.5 * (1.0 / 12.0) * 0.25).epsilon(1e-13));
    // kappa scaling: degree n + (2d+1) = 1 + 3
    const std::vector<double> kappa2{-2.0};
    const std::span<const double> spans2[1] = {kappa2};
    CHECK(tropical_exp_volume(torus, spans2) == doctest::Approx(16.0 * v).epsilon(1e-12));
}

TEST_CASE("kontsevich (1,1) report") {
    const auto r = kontsevich_check_g1n1();
    CHECK(r.vstar == doctest::Approx(1.0 / 12.0));
    CHECK(r.rho == doctest::Approx(2.0));
    CHECK(r.psi_target == doctest::Approx(1.0 / 24.0));
    // the ratio must be a power of two times a rational near 1
    CHECK(std::fabs(r.log2_ratio - std::round(r.log2_ratio)) < 1e-12);
    CHECK(std::fabs(r.ratio - 2.0) < 1e-12);
}

TEST_CASE("polytope volume Monte Carlo") {
    SUBCASE("unit box") {
        auto r = polytope_volume_mc(unit_box(3), 200000, 5);
        CHECK(std::fabs(r.value - 1.0) <= std::max(4.0 * r.error_estimate, 1e-6));
    }
    SUBCASE("standard simplex has volume 1/6") {
        HPolytope p;
        p.dim = 3;
        for (int i = 0; i < 3; ++i) {
            std::vector<double> dn(3, 0.0);
            dn[static_cast<std::size_t>(i)] = -1.0;
            p.constraints.push_back({dn, 0.0});
        }
        p.constraints.push_back({{1.0, 1.0, 1.0}, 1.0});
        auto r = polytope_volume_mc(p, 400000, 6);
        CHECK(std::fabs(r.value - 1.0 / 6.0) <= 4.0 * r.error_estimate);
    }
    SUBCASE("unbounded polytope is rejected") {
        HPolytope p;
        p.dim = 2;
        p.constraints.push_back({{1.0, 0.0}, 1.0}); // x <= 1 only
        p.constraints.push_back({{0.0, 1.0}, 1.0});
        CHECK_THROWS_AS(polytope_volume_mc(p, 1000, 1), param_error);
    }
}

TEST_CASE("lp_maximize") {
    const auto box = unit_box(2);
    const double c1[2] = {1.0, 2.0};
    auto r = lp_maximize(box, c1);
    CHECK(r.status == LpStatus::optimal);
    CHECK(r.value == doctest::Approx(3.0).epsilon(1e-9));
    // negative orthant objective
    const double c2[2] = {-1.0, 0.0};
    auto r2 = lp_maximize(box, c2);
    CHECK(r2.value == doctest::Approx(0.0).epsilon(1e-9));
    // polytope in the negative orthant (negative rhs exercises phase 1)
    HPolytope neg;
    neg.dim = 1;
    neg.constraints.push_back({{1.0}, -1.0});  // x <= -1
    neg.constraints.push_back({{-1.0}, 2.0});  // x >= -2
    const double c3[1] = {1.0};
    auto r3 = lp_maximize(neg, c3);
    CHECK(r3.status == LpStatus::optimal);
    CHECK(r3.value == doctest::Approx(-1.0).epsilon(1e-9));
    // infeasible system
    HPolytope inf;
    inf.dim = 1;
    inf.constraints.push_back({{1.0}, -1.0});
    inf.constraints.push_back({{-1.0}, -1.0});
    auto r4 = lp_maximize(inf, c3);
    CHECK(r4.status == LpStatus::infeasible);
}

TEST_CASE("H-representation JSON round trip") {
    const auto p = tropical_crown_moment_polytope(std::vector<double>{-1.0, -0.5, -2.0});
    const auto q = HPolytope::from_json(p.to_json());
    CHECK(q.dim == p.dim);
    REQUIRE(q.constraints.size() == p.constraints.size());
    // same feasible set: agree on a probe grid
    for (double x : {-0.9, -0.3, 0.1})
        for (double y : {-0.4, -0.1})
            for (double l : {0.2, 1.0, 3.0}) {
                const double pt[3] = {x, y, l};
                CHECK(p.contains(pt) == q.contains(pt));
            }
    CHECK_THROWS_AS(HPolytope::from_json("{\"dim\": 0}"), param_error);
}
