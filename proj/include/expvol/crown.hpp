// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <span>

#include "expvol/quadrature.hpp"

namespace expvol {

// Exponential volume of the crown D_n^* at fixed boundary eigenvalue Lambda:
// the potential W = sum_i (B_i + K_i/B_i) integrated over the fiber
// B_n = e^{-l/2} sqrt(prod K) / (B_1 ... B_{n-1}) in d log B_1 ... d log B_{n-1}.
// Normalization matches the closed forms: n = 1 gives exp(-sqrt(K)(Lambda^{1/2}
// + Lambda^{-1/2})), n = 2 gives J_0(K_1 + K_2 + sqrt(K_1 K_2)(Lambda^{1/2} +
// Lambda^{-1/2})).
double crown_volume(int n, std::span<const double> K, double Lambda,
                    const QuadConfig& cfg = {});

// int_0^inf Vol_E(D_n^*)(K, l) l^k dl
double crown_moment_halfline(int n, std::span<const double> K, int k,
                             const QuadConfig& cfg = {});

// int_{-inf}^{inf} Vol_E(D_n^*)(K, l) e^{-l s/2} l^k dl over the enhanced
// cover; equals 2 (-2 d/ds)^k prod_i J_s(K_i).
double crown_signed_moment(int n, std::span<const double> K, double s, int k,
                           const QuadConfig& cfg = {});

namespace detail {
// Shared Laplace moment: int Vol_E(D_n^*)(K, l) e^{-l s/2} l^k dl with the
// l-range (0, inf) (halfline = true) or the full line.  Dimensions above
// cfg.nested_dim_cutoff fall back to importance-sampled Monte Carlo with the
// log-normal proposal centered at the saddle B_i = sqrt(K_i).
double crown_laplace_moment(int n, std::span<const double> K, double s, int k,
                            bool halfline, const QuadConfig& cfg);

// Monte-Carlo estimate of the same quantity (exposed for cross-checks).
IntegralResult crown_laplace_moment_mc(int n, std::span<const double> K, double s,
                                       int k, bool halfline, const QuadConfig& cfg);

double crown_volume_closed_form_n2(std::span<const double> K, double Lambda,
                                   const QuadConfig& cfg);
} // namespace detail

} // namespace expvol
