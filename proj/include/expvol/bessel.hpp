// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <span>

#include "expvol/quadrature.hpp"

namespace expvol {

// The Bessel kernel J_s(z) = int_0^inf exp(-sqrt(z)(t + 1/t)) t^s dt/t,
// even in s.  Every call evaluates both the quadrature route (log chart)
// and 2 K_s(2 sqrt(z)) from the in-house K implementation, and requires the
// two to agree to 1e-8 relative.
//
// Only real s is supported.  The kernel extends to an entire function of
// complex s (the Laplace variable), and the length transforms built on it
// continue meromorphically, but that continuation is out of scope here.
double bessel_J(double s, double z, const QuadConfig& cfg = {});

// (d/ds)^k J_s(z) = int exp(-sqrt(z)(t+1/t)) t^s (log t)^k dt/t.
double bessel_J_logmoment(double s, double z, int k, const QuadConfig& cfg = {});

// prod_i J_s(ks[i]); the empty product is 1 (with a warning).
double bessel_product(double s, std::span<const double> ks, const QuadConfig& cfg = {});

// Modified Bessel function of the second kind, built from scratch: reflection
// (or digamma limiting) series below the switchover argument, the large-x
// asymptotic expansion above it.
double bessel_K(double nu, double x);

namespace detail {
constexpr double kBesselSwitchover = 10.0;
// The two branches, exposed for the overlap tests.
long double bessel_K_series(long double nu, long double x);
long double bessel_K_asymptotic(long double nu, long double x);
} // namespace detail

} // namespace expvol
