// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include <doctest.h>

#include <cmath>

#include "expvol/cluster.hpp"
#include "expvol/errors.hpp"

using namespace expvol;

namespace {

Seed rank2_seed(double x, double y, int e12) {
    Seed s;
    s.n_unfrozen = 2;
    s.names = {"X1", "X2"};
    s.x = {x, y};
    s.eps = {{0, e12}, {-e12, 0}};
    s.check();
    return s;
}

} // namespace

TEST_CASE("mutation is an involution") {
    // dyadic-friendly values stay exact in binary floating point
    Seed s = rank2_seed(2.0, 3.0, 1);
    Seed back = mutate(mutate(s, 0), 0);
    CHECK(back.x[0] == 2.0);
    CHECK(back.x[1] == 3.0);
    CHECK(back.eps == s.eps);

    Seed r = rank2_seed(0.731, 5.17, 2);
    Seed rback = mutate(mutate(r, 1), 1);
    CHECK(rback.x[0] == doctest::Approx(r.x[0]).epsilon(1e-12));
    CHECK(rback.x[1] == doctest::Approx(r.x[1]).epsilon(1e-12));
}

TEST_CASE("pentagon relation in rank 2, eps = 1") {
    // mu_1 mu_2 mu_1 mu_2 mu_1 returns the seed with the labels exchanged.
    Seed s = rank2_seed(1.7, 0.4, 1);
    Seed t = s;
    t = mutate(t, 0);
    t = mutate(t, 1);
    t = mutate(t, 0);
    t = mutate(t, 1);
    t = mutate(t, 0);
    CHECK(t.x[0] == doctest::Approx(s.x[1]).epsilon(1e-12));
    CHECK(t.x[1] == doctest::Approx(s.x[0]).epsilon(1e-12));

    // direct composition oracle for the first two steps: eps_21 = -1 puts
    // X_2 on the (1 + X_1^{-1})^{-1} branch; after mu_1 the matrix flips,
    // so mu_2 then multiplies X_1 by (1 + X_2).
    Seed u = mutate(s, 0);
    CHECK(u.x[0] == doctest::Approx(1.0 / 1.7).epsilon(1e-15));
    CHECK(u.x[1] == doctest::Approx(0.4 / (1.0 + 1.0 / 1.7)).epsilon(1e-15));
    CHECK(u.eps[0][1] == -1);
    Seed v = mutate(u, 1);
    CHECK(v.x[1] == doctest::Approx(1.0 / u.x[1]).epsilon(1e-15));
    CHECK(v.x[0] == doctest::Approx(u.x[0] / (1.0 + 1.0 / u.x[1])).epsilon(1e-15));
}

TEST_CASE("frozen indices cannot mutate") {
    Seed s = make_seed_A11(1.0, 1.0, 4.0);
    CHECK_THROWS_AS(mutate(s, 2), param_error);
    CHECK_THROWS_AS(mutate(s, -1), param_error);
}

TEST_CASE("A_{1,1} seed construction hits the requested invariants") {
    const double K1 = 2.0, K2 = 0.5, lam = 9.0;
    Seed s = make_seed_A11(K1, K2, lam);
    CHECK(frozen_K_A11(s, 1) == doctest::Approx(K1).epsilon(1e-13));
    CHECK(frozen_K_A11(s, 2) == doctest::Approx(K2).epsilon(1e-13));
    CHECK(trace_A11(s) ==
          doctest::Approx(std::sqrt(lam) + 1.0 / std::sqrt(lam)).epsilon(1e-13));
    CHECK_THROWS_AS(make_seed_A11(1.0, 1.0, 0.9), param_error);
}

TEST_CASE("Dehn twist invariants and inverse") {
    Seed s = make_seed_A11(1.0, 1.0, 4.0);
    const double k1 = frozen_K_A11(s, 1);
    const double tr = trace_A11(s);
    const double w1 = potential_W1_A11(s);

    Seed t = dehn_twist_A11(s);
    CHECK(frozen_K_A11(t, 1) == doctest::Approx(k1).epsilon(1e-12));
    CHECK(trace_A11(t) == doctest::Approx(tr).epsilon(1e-12));
    CHECK(potential_W1_A11(t) == doctest::Approx(w1).epsilon(1e-12));
    CHECK(t.x[0] != doctest::Approx(s.x[0])); // genuinely moved

    Seed back = dehn_twist_A11_inverse(t);
    CHECK(back.x[0] == doctest::Approx(s.x[0]).epsilon(1e-12));
    CHECK(back.x[1] == doctest::Approx(s.x[1]).epsilon(1e-12));
    CHECK(back.x[2] == doctest::Approx(s.x[2]).epsilon(1e-12));

    Seed wrong = rank2_seed(1.0, 2.0, 1);
    CHECK_THROWS_AS(dehn_twist_A11(wrong), param_error);
}

TEST_CASE("triangle potential") {
    auto r = triangle_potential({1.0, 1.0, 1.0});
    CHECK(r.W_p == 1.0);
    CHECK(r.W_total == 3.0);
    // homogeneity of degree 1/2
    auto r4 = triangle_potential({4.0, 4.0, 4.0});
    CHECK(r4.W_p == doctest::Approx(2.0 * r.W_p));
    // permutation symmetry of the total
    auto rab = triangle_potential({0.7, 1.9, 3.1});
    auto rba = triangle_potential({1.9, 3.1, 0.7});
    CHECK(rab.W_total == doctest::Approx(rba.W_total).epsilon(1e-14));
    CHECK_THROWS_AS(triangle_potential({0.0, 1.0, 1.0}), param_error);
}

TEST_CASE("trouser leg potential") {
    auto r = trouser_leg_potential({1.0, 0.0});
    CHECK(r.W == 2.0);
    CHECK(r.Q == 1.0);
    CHECK(r.R == r.W);
    CHECK(r.Rprime == 0.0);
    for (double l : {0.0, 0.5, 2.0, 7.0}) {
        auto t = trouser_leg_potential({1.7, l});
        CHECK(t.R == doctest::Approx(t.Rprime + 2.0 * t.Q).epsilon(1e-15));
        CHECK(t.W - 2.0 * t.Q >= -1e-15);
    }
    CHECK(trouser_leg_potential({1.0, 40.0}).Q < 1e-8); // Q -> 0 as l -> inf
}

TEST_CASE("McShane partial sums") {
    SUBCASE("degenerate neck") {
        auto r = mcshane_partial_sum_A11(1.0, 1.0, 1.0, 10);
        CHECK(r.partial == 0.0);
        CHECK(r.target == 0.0);
    }
    SUBCASE("monotone, bounded, geometric gap at (1,1,4)") {
        const auto partials = mcshane_partial_sums_A11(1.0, 1.0, 4.0, 40);
        const double target = 1.5; // sqrt(1)(2 - 1/2)
        double prev = -1.0;
        for (double p : partials) {
            CHECK(p >= prev - 1e-15);
            CHECK(p <= target + 1e-12);
            prev = p;
        }
        const double gap20 = target - partials[20];
        const double gap30 = target - partials[30];
        CHECK(gap30 < 0.5 * gap20); // at least geometric decay
        CHECK(partials.back() > 0.999 * target);
    }
    SUBCASE("asymmetric parameters converge too") {
        auto r = mcshane_partial_sum_A11(2.0, 0.5, 9.0, 60);
        const double target = std::sqrt(2.0) * (3.0 - 1.0 / 3.0);
        CHECK(r.target == doctest::Approx(target).epsilon(1e-15));
        CHECK(r.partial <= target * (1.0 + 1e-12));
        CHECK(r.partial > 0.999 * target);
    }
}
