// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

// Test-side oracles, kept independent of the library's computation paths:
// uniform-trapezoid evaluation of the cosh-integral representation in long
// double.  For entire integrands on the line the trapezoid rule converges
// geometrically in the step size, which gives ~1e-17 here.

namespace oracles {

// K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt
long double bessel_K(long double nu, long double x);

// J_s(z) = 2 K_s(2 sqrt(z))
long double bessel_J(long double s, long double z);

// int_0^inf exp(-a e^{l/2} - b e^{-l/2}) l^k dl by the same grid
long double halfline_cosh_moment(long double a, long double b, int k);

} // namespace oracles
