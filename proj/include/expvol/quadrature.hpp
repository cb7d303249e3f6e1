// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace expvol {

struct QuadConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
    // Semi-infinite tails are cut where the transformed integrand falls below
    // truncation_drop times its scanned peak.
    double truncation_drop = 1e-18;
    int nested_dim_cutoff = 4;
    std::uint64_t mc_seed = 0x9e3779b97f4a7c15ULL;
    std::int64_t mc_samples = 200000;

    void validate() const;
};

enum class Method { nested, monte_carlo };

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
    Method method = Method::nested;
};

// 1-D integrand.  The scalar callback is mandatory; the batch callback, when
// present, is used by the Gauss-Kronrod rule to evaluate whole node blocks
// (this is where the SIMD kernels plug in).
struct Fn1D {
    std::function<double(double)> f;
    std::function<void(const double*, double*, std::size_t)> batch;

    Fn1D() = default;
    Fn1D(std::function<double(double)> fn) : f(std::move(fn)) {}
    Fn1D(std::function<double(double)> fn,
         std::function<void(const double*, double*, std::size_t)> bf)
        : f(std::move(fn)), batch(std::move(bf)) {}

    void eval(const double* x, double* y, std::size_t n) const;
};

using FnND = std::function<double(std::span<const double>)>;

enum class AxisDomain { halfline, line };

// Importance-sampling proposal: draws points and reports its own density.
struct McProposal {
    int dim = 0;
    std::function<void(std::uint64_t index, std::span<double> out)> sample;
    std::function<double(std::span<const double>)> density;
};

// integral of f over (0, inf); computed after the substitution t = e^u.
// center_hint is the starting point (in u) of the peak scan.
IntegralResult integrate_halfline(const Fn1D& f, const QuadConfig& cfg,
                                  double center_hint = 0.0);

// integral of f over (-inf, inf).
IntegralResult integrate_line(const Fn1D& f, const QuadConfig& cfg,
                              double center_hint = 0.0);

// integral over a finite interval [a, b].
IntegralResult integrate_interval(const Fn1D& f, double a, double b,
                                  const QuadConfig& cfg);

// Nested application of the 1-D integrators over k = domains.size() axes,
// k <= cfg.nested_dim_cutoff.  Inner tolerances are tightened by a factor k.
IntegralResult integrate_box(const FnND& f, std::span<const AxisDomain> domains,
                             const QuadConfig& cfg,
                             std::span<const double> center_hints = {});

// Importance-sampling Monte Carlo estimate of integral f with n samples.
// error_estimate is the standard error of the mean.
IntegralResult integrate_mc(const FnND& f, const McProposal& proposal,
                            std::int64_t n, const QuadConfig& cfg);

namespace detail {
// Truncation window for a transformed integrand on the real line: scan on a
// doubling grid from `center` until |g| drops below drop * peak on both sides.
struct Window {
    double lo, hi, peak;
};
Window scan_window(const Fn1D& g, double center, double drop,
                   std::int64_t* evals);
} // namespace detail

} // namespace expvol
