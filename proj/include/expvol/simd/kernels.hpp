// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner-loop kernels used by the quadrature and Monte-Carlo
// engines.  Every kernel has a scalar reference implementation and, on
// x86-64, an AVX2+FMA variant.  The active variant is selected once at
// startup from CPUID and can be forced for equivalence testing.
//
// The shared shape of the hot integrands is
//     exp(-a*e^u - b*e^{-u} + s*u) * (alpha - 2u)^k
// which covers the Bessel kernel, the crown potential in log coordinates,
// and the length-power weights of the moment integrals.

namespace expvol::simd {

enum class Isa { scalar, avx2 };

// Highest ISA supported by the hardware this process runs on.
Isa detect_isa();

// Currently dispatched ISA.
Isa active_isa();

// Force a specific ISA (used by the equivalence tests).  Requesting avx2 on
// hardware without it falls back to scalar and returns the actual choice.
Isa set_isa(Isa isa);

const char* isa_name(Isa isa);

// out[i] = exp(x[i])
void vexp(const double* x, double* out, std::size_t n);

// out[i] = exp(-a*e^{u[i]} - b*e^{-u[i]} + s*u[i]) * (alpha - 2*u[i])^kpow
// kpow >= 0; kpow = 0 gives the plain exponential-of-cosh kernel.
void exp_cosh_pow(const double* u, double* out, std::size_t n,
                  double a, double b, double s, double alpha, int kpow);

// acc[i] += a*e^{u[i]} + b*e^{-u[i]}
void add_scaled_cosh(const double* u, double* acc, std::size_t n,
                     double a, double b);

// Count points x_j (SoA layout: coords[d] points to n values of coordinate d)
// satisfying A x <= b for all rows.  A is row-major nrows x dim.
std::size_t count_inside_halfspaces(const double* const* coords, std::size_t n,
                                    std::size_t dim, const double* A,
                                    const double* b, std::size_t nrows);

namespace detail {
// Per-ISA entry points, exposed so the tests can compare variants directly.
void vexp_scalar(const double* x, double* out, std::size_t n);
void exp_cosh_pow_scalar(const double* u, double* out, std::size_t n,
                         double a, double b, double s, double alpha, int kpow);
void add_scaled_cosh_scalar(const double* u, double* acc, std::size_t n,
                            double a, double b);
std::size_t count_inside_halfspaces_scalar(const double* const* coords, std::size_t n,
                                           std::size_t dim, const double* A,
                                           const double* b, std::size_t nrows);

#if defined(EXPVOL_HAVE_AVX2)
void vexp_avx2(const double* x, double* out, std::size_t n);
void exp_cosh_pow_avx2(const double* u, double* out, std::size_t n,
                       double a, double b, double s, double alpha, int kpow);
void add_scaled_cosh_avx2(const double* u, double* acc, std::size_t n,
                          double a, double b);
std::size_t count_inside_halfspaces_avx2(const double* const* coords, std::size_t n,
                                         std::size_t dim, const double* A,
                                         const double* b, std::size_t nrows);
#endif
} // namespace detail

} // namespace expvol::simd
