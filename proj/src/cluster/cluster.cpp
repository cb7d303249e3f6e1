// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include "expvol/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "expvol/errors.hpp"

namespace expvol {

void Seed::check() const {
    const int n = size();
    if (n_unfrozen < 0 || n_unfrozen > n) throw param_error("Seed: bad unfrozen count");
    if (static_cast<int>(names.size()) != n || static_cast<int>(eps.size()) != n)
        throw param_error("Seed: shape mismatch");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(eps[static_cast<std::size_t>(i)].size()) != n)
            throw param_error("Seed: exchange matrix not square");
        if (!(x[static_cast<std::size_t>(i)] > 0.0))
            throw param_error("Seed: variables must be positive");
        for (int j = 0; j < n; ++j)
            if (eps[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                -eps[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw param_error("Seed: exchange matrix not skew-symmetric");
    }
}

double Seed::var(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return x[i];
    throw param_error("Seed: no variable named " + name);
}

Seed mutate(const Seed& seed, int k) {
    if (k < 0 || k >= seed.n_unfrozen)
        throw param_error("mutate: index is frozen or out of range");
    const int n = seed.size();
    const auto ku = static_cast<std::size_t>(k);
    Seed out = seed;
    const double xk = seed.x[ku];
    out.x[ku] = 1.0 / xk;
    for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        const auto ju = static_cast<std::size_t>(j);
        const int e = seed.eps[ju][ku];
        if (e >= 0)
            out.x[ju] = seed.x[ju] * std::pow(1.0 + xk, e);
        else
            out.x[ju] = seed.x[ju] * std::pow(1.0 + 1.0 / xk, e);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto iu = static_cast<std::size_t>(i);
            const auto ju = static_cast<std::size_t>(j);
            if (i == k || j == k) {
                out.eps[iu][ju] = -seed.eps[iu][ju];
            } else {
                const int eik = seed.eps[iu][ku];
                const int ekj = seed.eps[ku][ju];
                out.eps[iu][ju] =
                    seed.eps[iu][ju] + (std::abs(eik) * ekj + eik * std::abs(ekj)) / 2;
            }
        }
    }
    return out;
}

namespace {

constexpr int kA11_X = 0;
constexpr int kA11_Y = 1;
constexpr int kA11_B1 = 2;
constexpr int kA11_B2 = 3;

void check_A11_shape(const Seed& seed) {
    if (seed.size() != 4 || seed.n_unfrozen != 2 ||
        std::abs(seed.eps[kA11_X][kA11_Y]) != 2)
        throw param_error("dehn_twist_A11: seed is not an A_{1,1} chart");
}

// Exchange the X and Y slots (variables and exchange-matrix rows/columns).
Seed swap_xy(const Seed& seed) {
    Seed out = seed;
    std::swap(out.x[kA11_X], out.x[kA11_Y]);
    const int n = seed.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int si = i == kA11_X ? kA11_Y : (i == kA11_Y ? kA11_X : i);
            int sj = j == kA11_X ? kA11_Y : (j == kA11_Y ? kA11_X : j);
            out.eps[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                seed.eps[static_cast<std::size_t>(si)][static_cast<std::size_t>(sj)];
        }
    return out;
}

} // namespace

Seed make_seed_A11(double K1, double K2, double Lambda) {
    if (!(K1 > 0.0 && K2 > 0.0)) throw param_error("make_seed_A11: K must be positive");
    if (!(Lambda > 1.0)) throw param_error("make_seed_A11: requires Lambda > 1");
    const double t = std::sqrt(Lambda) + 1.0 / std::sqrt(Lambda);
    // Pick X on the twist orbit with the quadratic u^2 - t u + (1 + X) = 0
    // solvable, u = sqrt(XY):
    const double X = 0.5 * (t * t / 4.0 - 1.0);
    const double disc = t * t - 4.0 * (1.0 + X);
    const double u = 0.5 * (t + std::sqrt(disc));
    const double Y = u * u / X;
    Seed s;
    s.n_unfrozen = 2;
    s.names = {"X", "Y", "B1", "B2"};
    s.x = {X, Y, std::sqrt(K1) / u, std::sqrt(K2) / u};
    s.eps = {
        {0, 2, -1, -1},
        {-2, 0, 1, 1},
        {1, -1, 0, 0},
        {1, -1, 0, 0},
    };
    s.check();
    return s;
}

Seed dehn_twist_A11(const Seed& seed) {
    check_A11_shape(seed);
    return swap_xy(mutate(seed, kA11_Y));
}

Seed dehn_twist_A11_inverse(const Seed& seed) {
    check_A11_shape(seed);
    return mutate(swap_xy(seed), kA11_Y);
}

double trace_A11(const Seed& seed) {
    const double X = seed.x[kA11_X];
    const double Y = seed.x[kA11_Y];
    return (1.0 + X + X * Y) / std::sqrt(X * Y);
}

double potential_W1_A11(const Seed& seed) {
    const double X = seed.x[kA11_X];
    const double Y = seed.x[kA11_Y];
    return seed.x[kA11_B1] * (1.0 + X + X * Y);
}

double frozen_K_A11(const Seed& seed, int i) {
    if (i != 1 && i != 2) throw param_error("frozen_K_A11: i must be 1 or 2");
    const double B = seed.x[static_cast<std::size_t>(i == 1 ? kA11_B1 : kA11_B2)];
    return B * B * seed.x[kA11_X] * seed.x[kA11_Y];
}

TrianglePotentialResult triangle_potential(const TrianglePotentials& tp) {
    if (!(tp.K_a > 0.0 && tp.K_b > 0.0 && tp.K_p > 0.0))
        throw param_error("triangle_potential: K must be positive");
    TrianglePotentialResult r;
    r.W_p = std::sqrt(tp.K_a * tp.K_b / tp.K_p);
    r.W_total = r.W_p + std::sqrt(tp.K_p * tp.K_b / tp.K_a) + std::sqrt(tp.K_a * tp.K_p / tp.K_b);
    return r;
}

TrouserLegPotentials trouser_leg_potential(const TrouserLeg& t) {
    if (!(t.K > 0.0)) throw param_error("trouser_leg_potential: K must be positive");
    const double sq = std::sqrt(t.K);
    const double lp = std::exp(0.5 * t.l);
    TrouserLegPotentials r;
    r.W = sq * (lp + 1.0 / lp);
    r.Q = sq / lp;
    r.R = r.W;
    r.Rprime = sq * (lp - 1.0 / lp);
    return r;
}

std::vector<double> mcshane_partial_sums_A11(double K1, double K2, double Lambda,
                                             int N_max) {
    if (!(K1 > 0.0 && K2 > 0.0) || !(Lambda >= 1.0))
        throw param_error("mcshane_partial_sum_A11: needs positive K and Lambda >= 1");
    if (N_max < 0) throw param_error("mcshane_partial_sum_A11: N must be >= 0");
    if (Lambda == 1.0)
        return std::vector<double>(static_cast<std::size_t>(N_max) + 1, 0.0);

    // Triangle gap term of the n-th chart: the middle term B1 X of the cusp
    // potential W1 = B1 + B1 X + B1 XY, i.e. sqrt(K1 X / Y) with the arc
    // K-coordinates A_n A_{n+1} = K1 K2 X/Y and the opposite side carrying K2.
    // The pairing is pinned by the partial sums converging to the target.
    auto term = [K1](const Seed& s) {
        return std::sqrt(K1 * s.x[kA11_X] / s.x[kA11_Y]);
    };
    auto check_positive = [](const Seed& s) {
        for (double v : s.x)
            if (!(v > 0.0) || !std::isfinite(v))
                throw eval_error("mcshane_partial_sum_A11: twist iteration left the positive chart");
    };

    const Seed seed0 = make_seed_A11(K1, K2, Lambda);
    std::vector<double> partials(static_cast<std::size_t>(N_max) + 1, 0.0);
    double sum = term(seed0);
    partials[0] = sum;
    Seed fwd = seed0;
    Seed bwd = seed0;
    for (int nstep = 1; nstep <= N_max; ++nstep) {
        fwd = dehn_twist_A11(fwd);
        bwd = dehn_twist_A11_inverse(bwd);
        check_positive(fwd);
        check_positive(bwd);
        sum += term(fwd) + term(bwd);
        partials[static_cast<std::size_t>(nstep)] = sum;
    }
    return partials;
}

McShaneResult mcshane_partial_sum_A11(double K1, double K2, double Lambda, int N) {
    const auto partials = mcshane_partial_sums_A11(K1, K2, Lambda, N);
    McShaneResult r;
    r.partial = partials.back();
    r.target = std::sqrt(K1) * (std::sqrt(Lambda) - 1.0 / std::sqrt(Lambda));
    return r;
}

} // namespace expvol
