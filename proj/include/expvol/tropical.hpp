// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <span>

#include "expvol/polytope.hpp"
#include "expvol/quadrature.hpp"
#include "expvol/recursion.hpp"
#include "expvol/types.hpp"

namespace expvol {

// Tropical exponential volume of the crown: 2 prod |kappa_i| over the box
// {kappa_i <= b_i <= 0}; zero when some kappa_i > 0.
double tropical_crown_volume(std::span<const double> kappa);

// int_0^inf Vol^t(kappa, l) l^d dl: the integral of l^d over the polytope
// {kappa_i <= b_i <= 0 (i < n),
//  kappa_n + sum' kappa <= l + 2 sum' b <= -kappa_n + sum' kappa, l >= 0}.
// Exact piecewise-rational integration for n <= 3 (rational kappa), rejection
// Monte Carlo otherwise.
double tropical_crown_moment(std::span<const double> kappa, int d,
                             const QuadConfig& cfg = {});

// Fixed-length fiber volume Vol^t(kappa, l): the (n-1)-volume of the slice.
double tropical_crown_volume_fixed_length(std::span<const double> kappa, double l);

// The moment polytope in coordinates (b_1 .. b_{n-1}, l).
HPolytope tropical_crown_moment_polytope(std::span<const double> kappa);

// Tropical neck recursion: C_S sum_{|d| = 3g-3+m} V*_{g,d} prod_j
// moment(kappa_j, 2 d_j + 1), with V* = 2^dim dim!/(prod d_j!) V.
// Only surfaces whose boundaries are all crowns are supported.
double tropical_exp_volume(const DecoratedSurface& s,
                           std::span<const std::span<const double>> kappa,
                           const QuadConfig& cfg = {}, const ModelContext& ctx = {});

// Desk check of the (g,n) = (1,1) tropical coefficient against the psi-class
// intersection number 1/24; report-only, asserted up to a power of 2.
struct KontsevichReport {
    double vstar = 0.0;          // V*_{1,(1)}
    double rho = 0.0;            // 4^d 2^{-g}
    double tropical_coeff = 0.0; // rho^{-1} (l^2-coefficient of Vol^t)
    double psi_target = 0.0;     // 1/24
    double ratio = 0.0;
    double log2_ratio = 0.0;
};
KontsevichReport kontsevich_check_g1n1();

} // namespace expvol
