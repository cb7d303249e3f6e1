// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include "expvol/crown.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "expvol/bessel.hpp"
#include "expvol/detail/rng.hpp"
#include "expvol/errors.hpp"
#include "expvol/simd/kernels.hpp"

namespace expvol {

namespace {

void check_crown_args(int n, std::span<const double> K, double Lambda) {
    if (n < 1) throw param_error("crown: n must be >= 1");
    if (static_cast<int>(K.size()) != n) throw param_error("crown: K arity != n");
    for (double k : K)
        if (!(k > 0.0)) throw param_error("crown: K must be positive");
    if (!(Lambda > 0.0)) throw param_error("crown: Lambda must be positive");
}

// Fiber integral over u_i = log B_i, i = 1..n-1, with
// B_n = c e^{-sum u_i}, c = e^{-l/2} sqrt(prod K).  The innermost axis sees
// exp(-a e^u - b e^{-u}) with the remaining potential folded into a constant,
// which is exactly the SIMD kernel shape.
double crown_fiber_integral(int n, std::span<const double> K, double c,
                            const QuadConfig& cfg) {
    const int fiber_dim = n - 1;
    QuadConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol / fiber_dim;
    inner.rel_tol = cfg.rel_tol / fiber_dim;

    std::function<double(int, double, double)> level =
        [&](int axis, double partial_pot, double partial_sum) -> double {
        // partial_pot = sum over handled axes of (e^{u_i} + K_i e^{-u_i});
        // partial_sum = sum of handled u_i.
        if (axis == fiber_dim - 1) {
            const double r = std::exp(partial_sum);
            const double a = 1.0 + K[static_cast<std::size_t>(n - 1)] * r / c;
            const double b = K[static_cast<std::size_t>(axis)] + c / r;
            const double scale = std::exp(-partial_pot);
            Fn1D g;
            g.f = [a, b, scale](double t) {
                return scale * std::exp(-a * std::exp(t) - b * std::exp(-t));
            };
            g.batch = [a, b, scale](const double* t, double* y, std::size_t m) {
                simd::exp_cosh_pow(t, y, m, a, b, 0.0, 0.0, 0);
                for (std::size_t i = 0; i < m; ++i) y[i] *= scale;
            };
            const double hint = 0.5 * std::log(b / a);
            return integrate_line(g, inner, hint).value;
        }
        Fn1D g;
        g.f = [&, axis](double t) {
            const double pot = std::exp(t) + K[static_cast<std::size_t>(axis)] * std::exp(-t);
            return level(axis + 1, partial_pot + pot, partial_sum + t);
        };
        const double hint = 0.5 * std::log(K[static_cast<std::size_t>(axis)]);
        return integrate_line(g, inner, hint).value;
    };
    return level(0, 0.0, 0.0);
}

double crown_volume_impl(int n, std::span<const double> K, double Lambda,
                         const QuadConfig& cfg) {
    if (n == 1)
        return std::exp(-std::sqrt(K[0]) * (std::sqrt(Lambda) + 1.0 / std::sqrt(Lambda)));
    double prodK = 1.0;
    for (double k : K) prodK *= k;
    const double c = std::sqrt(prodK / Lambda); // e^{-l/2} sqrt(prod K)
    return crown_fiber_integral(n, K, c, cfg);
}

} // namespace

double crown_volume(int n, std::span<const double> K, double Lambda,
                    const QuadConfig& cfg) {
    check_crown_args(n, K, Lambda);
    cfg.validate();
    return crown_volume_impl(n, K, Lambda, cfg);
}

namespace detail {

double crown_volume_closed_form_n2(std::span<const double> K, double Lambda,
                                   const QuadConfig&) {
    const double arg =
        K[0] + K[1] + std::sqrt(K[0] * K[1]) * (std::sqrt(Lambda) + 1.0 / std::sqrt(Lambda));
    return 2.0 * bessel_K(0.0, 2.0 * std::sqrt(arg));
}

IntegralResult crown_laplace_moment_mc(int n, std::span<const double> K, double s,
                                       int k, bool halfline, const QuadConfig& cfg) {
    // Unconstrained B-space form: 2 int e^{-W} Lambda^{-s/2} l^k d^n(log B),
    // l = log(prod K) - 2 sum u, importance-sampled with independent normals
    // in u centered at the saddle u_i = log sqrt(K_i).  The importance weight
    //   w = 2 exp(-W - l s/2 + |z|^2/2) (sigma sqrt(2 pi))^n l^k
    // is evaluated in blocks: add_scaled_cosh accumulates W axis by axis and
    // one vexp handles the combined exponent.
    const double sigma = 1.25;
    const double log_norm =
        n * std::log(sigma * std::sqrt(2.0 * 3.14159265358979323846));
    std::vector<double> mu(static_cast<std::size_t>(n));
    double log_prod_k = 0.0;
    for (int i = 0; i < n; ++i) {
        mu[static_cast<std::size_t>(i)] = 0.5 * std::log(K[static_cast<std::size_t>(i)]);
        log_prod_k += std::log(K[static_cast<std::size_t>(i)]);
    }

    constexpr std::size_t kBlock = 4096;
    std::vector<std::vector<double>> u(static_cast<std::size_t>(n),
                                       std::vector<double>(kBlock));
    std::vector<double> pot(kBlock), expo(kBlock), lvals(kBlock), w(kBlock);

    double mean = 0.0, m2 = 0.0;
    std::int64_t done = 0;
    const std::int64_t total = cfg.mc_samples;
    while (done < total) {
        const std::size_t cnt =
            static_cast<std::size_t>(std::min<std::int64_t>(kBlock, total - done));
        std::fill(pot.begin(), pot.begin() + static_cast<std::ptrdiff_t>(cnt), 0.0);
        std::fill(expo.begin(), expo.begin() + static_cast<std::ptrdiff_t>(cnt), 0.0);
        std::fill(lvals.begin(), lvals.begin() + static_cast<std::ptrdiff_t>(cnt),
                  log_prod_k);
        for (int d = 0; d < n; ++d) {
            auto& ud = u[static_cast<std::size_t>(d)];
            for (std::size_t i = 0; i < cnt; ++i) {
                const double z = expvol::detail::normal01(
                    cfg.mc_seed, static_cast<std::uint64_t>(done + static_cast<std::int64_t>(i)),
                    static_cast<std::uint64_t>(d));
                ud[i] = mu[static_cast<std::size_t>(d)] + sigma * z;
                expo[i] += 0.5 * z * z;
                lvals[i] -= 2.0 * ud[i];
            }
            simd::add_scaled_cosh(ud.data(), pot.data(), cnt, 1.0,
                                  K[static_cast<std::size_t>(d)]);
        }
        for (std::size_t i = 0; i < cnt; ++i)
            expo[i] += -pot[i] - 0.5 * s * lvals[i] + log_norm;
        simd::vexp(expo.data(), w.data(), cnt);
        for (std::size_t i = 0; i < cnt; ++i) {
            double wi = 2.0 * w[i];
            if (halfline && lvals[i] < 0.0) wi = 0.0;
            for (int j = 0; j < k; ++j) wi *= lvals[i];
            if (!std::isfinite(wi))
                throw eval_error("crown moment MC: non-finite importance weight");
            const std::int64_t idx = done + static_cast<std::int64_t>(i);
            const double delta = wi - mean;
            mean += delta / static_cast<double>(idx + 1);
            m2 += delta * (wi - mean);
        }
        done += static_cast<std::int64_t>(cnt);
    }
    const double var = m2 / static_cast<double>(total - 1);
    const double se = std::sqrt(std::max(0.0, var) / static_cast<double>(total));
    return {mean, se, total, Method::monte_carlo};
}

double crown_laplace_moment(int n, std::span<const double> K, double s, int k,
                            bool halfline, const QuadConfig& cfg) {
    if (k < 0) throw param_error("crown moment: k must be >= 0");
    if (n > cfg.nested_dim_cutoff)
        return crown_laplace_moment_mc(n, K, s, k, halfline, cfg).value;

    QuadConfig outer = cfg;
    Fn1D g;
    g.f = [&, n, s, k](double l) {
        double v = crown_volume_impl(n, K, std::exp(l), outer) * std::exp(-0.5 * l * s);
        for (int i = 0; i < k; ++i) v *= l;
        return v;
    };
    if (n == 1) {
        // closed fiber: exp(-sqrt(K)(e^{l/2} + e^{-l/2})) e^{-ls/2} l^k, which
        // in t = l/2 is the SIMD kernel with alpha = 0.
        const double sq = std::sqrt(K[0]);
        g.f = [sq, s, k](double l) {
            double v = std::exp(-sq * (std::exp(0.5 * l) + std::exp(-0.5 * l)) - 0.5 * l * s);
            for (int i = 0; i < k; ++i) v *= l;
            return v;
        };
    }
    IntegralResult r;
    if (halfline) {
        // l = e^t substitution via integrate_halfline over the length variable.
        Fn1D h;
        h.f = [&g](double l) { return g.f(l); };
        r = integrate_halfline(h, outer, 0.0);
    } else {
        r = integrate_line(g, outer, 0.0);
    }
    return r.value;
}

} // namespace detail

double crown_moment_halfline(int n, std::span<const double> K, int k,
                             const QuadConfig& cfg) {
    check_crown_args(n, K, 1.0);
    cfg.validate();
    return detail::crown_laplace_moment(n, K, 0.0, k, true, cfg);
}

double crown_signed_moment(int n, std::span<const double> K, double s, int k,
                           const QuadConfig& cfg) {
    check_crown_args(n, K, 1.0);
    cfg.validate();
    return detail::crown_laplace_moment(n, K, s, k, false, cfg);
}

} // namespace expvol
