// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include "oracles.hpp"

#include <cmath>

namespace oracles {

long double bessel_K(long double nu, long double x) {
    // truncate where x cosh T > 11600 (exp underflows long double)
    const long double T = acoshl(11600.0L / x + 1.0L);
    const long double h = 0.004L;
    const int n = static_cast<int>(T / h) + 1;
    long double sum = 0.5L * expl(-x); // t = 0 term, cosh(0) = 1
    for (int i = 1; i <= n; ++i) {
        const long double t = h * i;
        sum += expl(-x * coshl(t)) * coshl(nu * t);
    }
    return sum * h;
}

long double bessel_J(long double s, long double z) {
    return 2.0L * bessel_K(s, 2.0L * sqrtl(z));
}

long double halfline_cosh_moment(long double a, long double b, int k) {
    // int_0^inf exp(-a e^{l/2} - b e^{-l/2}) l^k dl, composite Simpson.
    auto f = [a, b, k](long double l) {
        const long double e = expl(0.5L * l);
        long double v = expl(-a * e - b / e);
        for (int j = 0; j < k; ++j) v *= l;
        return v;
    };
    // upper cutoff: a e^{L/2} > 11600
    const long double L = 2.0L * logl(11600.0L / a + 1.0L) + 4.0L;
    const int n = 60000; // even
    const long double h = L / n;
    long double sum = f(0.0L) + f(L);
    for (int i = 1; i < n; ++i) sum += f(h * i) * (i % 2 ? 4.0L : 2.0L);
    return sum * h / 3.0L;
}

} // namespace oracles
