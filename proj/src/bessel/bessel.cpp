// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include "expvol/bessel.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "expvol/errors.hpp"
#include "expvol/simd/kernels.hpp"

namespace expvol {

namespace detail {

namespace {

// I_nu(x) truncated series, with the k = 0 term supplied by the caller.
// term_{k+1} = term_k * (x^2/4) / ((k+1)(k+1+nu))
long double bessel_I_series(long double nu, long double x, long double term0) {
    const long double q = 0.25L * x * x;
    long double term = term0;
    long double sum = term;
    for (int k = 0; k < 400; ++k) {
        term *= q / ((k + 1.0L) * (k + 1.0L + nu));
        sum += term;
        if (fabsl(term) < 1e-24L * fabsl(sum)) break;
    }
    return sum;
}

long double bessel_K_series_integer(int n, long double x) {
    // K_n(x) = 1/2 (x/2)^{-n} sum_{k<n} (n-k-1)!/k! (-x^2/4)^k
    //        + (-1)^{n+1} ln(x/2) I_n(x)
    //        + (-1)^n 1/2 (x/2)^n sum_k (psi(k+1)+psi(n+k+1))/(k!(n+k)!) (x^2/4)^k
    const long double half_x = 0.5L * x;
    const long double q = half_x * half_x;
    const long double lnhx = logl(half_x);
    const long double gamma = 0.57721566490153286060651209008240243L;

    long double finite = 0.0L;
    if (n > 0) {
        // term_k = (n-k-1)!/k! (-q)^k, term_0 = (n-1)!
        long double term = 1.0L;
        for (int i = 1; i < n; ++i) term *= i;
        for (int k = 0; k < n; ++k) {
            finite += term;
            if (k + 1 < n) term *= -q / ((k + 1.0L) * (n - k - 1.0L));
        }
        finite *= 0.5L * powl(half_x, static_cast<long double>(-n));
    }

    long double i_term0 = powl(half_x, static_cast<long double>(n));
    for (int i = 1; i <= n; ++i) i_term0 /= i; // (x/2)^n / n!
    const long double In = bessel_I_series(static_cast<long double>(n), x, i_term0);

    // psi sums, advanced with the recurrence psi(m+1) = psi(m) + 1/m.
    long double psi_k1 = -gamma;
    long double psi_nk1 = -gamma;
    for (int i = 1; i <= n; ++i) psi_nk1 += 1.0L / i;
    long double fact = i_term0; // (x/2)^n (q^k/(k!(n+k)!)) tracked via recurrence
    long double corr = fact * (psi_k1 + psi_nk1);
    long double corr_sum = corr;
    for (int k = 0; k < 400; ++k) {
        fact *= q / ((k + 1.0L) * (n + k + 1.0L));
        psi_k1 += 1.0L / (k + 1.0L);
        psi_nk1 += 1.0L / (n + k + 1.0L);
        corr = fact * (psi_k1 + psi_nk1);
        corr_sum += corr;
        if (fabsl(corr) < 1e-24L * (fabsl(corr_sum) + 1e-30L)) break;
    }

    const long double sign = (n % 2 == 0) ? 1.0L : -1.0L;
    return finite - sign * lnhx * In + sign * 0.5L * corr_sum;
}

} // namespace

long double bessel_K_series(long double nu, long double x) {
    nu = fabsl(nu);
    const long double nearest = roundl(nu);
    if (fabsl(nu - nearest) < 1e-9L)
        return bessel_K_series_integer(static_cast<int>(nearest), x);
    // Reflection form: K_nu = pi/2 (I_{-nu} - I_nu)/sin(pi nu).
    const long double half_x = 0.5L * x;
    const long double t_plus = powl(half_x, nu) / tgammal(1.0L + nu);
    const long double t_minus = powl(half_x, -nu) / tgammal(1.0L - nu);
    const long double i_plus = bessel_I_series(nu, x, t_plus);
    const long double i_minus = bessel_I_series(-nu, x, t_minus);
    const long double pi = 3.14159265358979323846264338327950288L;
    return 0.5L * pi * (i_minus - i_plus) / sinl(pi * nu);
}

long double bessel_K_asymptotic(long double nu, long double x) {
    // K_nu(x) ~ sqrt(pi/(2x)) e^{-x} sum_k a_k, a_k = a_{k-1}(mu-(2k-1)^2)/(8xk),
    // truncated at the smallest term.
    const long double mu = 4.0L * nu * nu;
    long double term = 1.0L;
    long double sum = 1.0L;
    long double prev = fabsl(term);
    for (int k = 1; k < 60; ++k) {
        const long double odd = 2.0L * k - 1.0L;
        term *= (mu - odd * odd) / (8.0L * x * k);
        if (fabsl(term) >= prev) break; // divergent tail reached
        sum += term;
        prev = fabsl(term);
        if (prev < 1e-24L * fabsl(sum)) break;
    }
    const long double pi = 3.14159265358979323846264338327950288L;
    return sqrtl(0.5L * pi / x) * expl(-x) * sum;
}

} // namespace detail

double bessel_K(double nu, double x) {
    if (!(x > 0.0)) throw param_error("bessel_K: argument must be positive");
    nu = std::fabs(nu);
    const long double v =
        x < detail::kBesselSwitchover
            ? detail::bessel_K_series(static_cast<long double>(nu), static_cast<long double>(x))
            : detail::bessel_K_asymptotic(static_cast<long double>(nu),
                                          static_cast<long double>(x));
    return static_cast<double>(v);
}

double bessel_J(double s, double z, const QuadConfig& cfg) {
    if (!(z > 0.0)) throw param_error("bessel_J: z must be positive");
    const double sq = std::sqrt(z);

    // (a) log chart: J_s(z) = int_R exp(-sqrt(z)(e^u + e^{-u}) + s u) du.
    Fn1D g;
    g.f = [sq, s](double u) { return std::exp(-sq * (std::exp(u) + std::exp(-u)) + s * u); };
    g.batch = [sq, s](const double* u, double* y, std::size_t n) {
        simd::exp_cosh_pow(u, y, n, sq, sq, s, 0.0, 0);
    };
    const double hint = std::asinh(s / (2.0 * sq));
    const double via_quadrature = integrate_line(g, cfg, hint).value;

    // (b) 2 K_s(2 sqrt(z)).
    const double via_k = 2.0 * bessel_K(s, 2.0 * sq);

    const double denom = std::max(std::fabs(via_k), 1e-300);
    if (std::fabs(via_quadrature - via_k) > 1e-8 * denom)
        throw consistency_error("bessel_J: quadrature and K-series paths disagree");
    return via_k;
}

double bessel_J_logmoment(double s, double z, int k, const QuadConfig& cfg) {
    if (!(z > 0.0)) throw param_error("bessel_J_logmoment: z must be positive");
    if (k < 0) throw param_error("bessel_J_logmoment: k must be >= 0");
    if (k == 0) return bessel_J(s, z, cfg);
    const double sq = std::sqrt(z);
    Fn1D g;
    g.f = [sq, s, k](double u) {
        double v = std::exp(-sq * (std::exp(u) + std::exp(-u)) + s * u);
        for (int i = 0; i < k; ++i) v *= u;
        return v;
    };
    g.batch = [sq, s, k](const double* u, double* y, std::size_t n) {
        // (alpha - 2u)^k with alpha = 0 equals (-2)^k u^k.
        simd::exp_cosh_pow(u, y, n, sq, sq, s, 0.0, k);
        const double scale = std::pow(-0.5, k);
        for (std::size_t i = 0; i < n; ++i) y[i] *= scale;
    };
    const double hint = std::asinh(s / (2.0 * sq));
    return integrate_line(g, cfg, hint).value;
}

double bessel_product(double s, std::span<const double> ks, const QuadConfig& cfg) {
    if (ks.empty()) {
        std::fprintf(stderr, "expvol: warning: bessel_product over an empty sequence\n");
        return 1.0;
    }
    double prod = 1.0;
    for (double z : ks) prod *= bessel_J(s, z, cfg);
    return prod;
}

} // namespace expvol
