// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include "expvol/simd/kernels.hpp"

#include <cmath>

namespace expvol::simd::detail {

void vexp_scalar(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(x[i]);
}

void exp_cosh_pow_scalar(const double* u, double* out, std::size_t n,
                         double a, double b, double s, double alpha, int kpow) {
    for (std::size_t i = 0; i < n; ++i) {
        const double eu = std::exp(u[i]);
        double v = std::exp(-a * eu - b / eu + s * u[i]);
        double p = alpha - 2.0 * u[i];
        for (int k = 0; k < kpow; ++k) v *= p;
        out[i] = v;
    }
}

void add_scaled_cosh_scalar(const double* u, double* acc, std::size_t n,
                            double a, double b) {
    for (std::size_t i = 0; i < n; ++i) {
        const double eu = std::exp(u[i]);
        acc[i] += a * eu + b / eu;
    }
}

std::size_t count_inside_halfspaces_scalar(const double* const* coords, std::size_t n,
                                           std::size_t dim, const double* A,
                                           const double* b, std::size_t nrows) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
        bool inside = true;
        for (std::size_t r = 0; r < nrows && inside; ++r) {
            double dot = 0.0;
            const double* row = A + r * dim;
            for (std::size_t d = 0; d < dim; ++d) dot += row[d] * coords[d][j];
            inside = dot <= b[r];
        }
        count += inside ? 1u : 0u;
    }
    return count;
}

} // namespace expvol::simd::detail
