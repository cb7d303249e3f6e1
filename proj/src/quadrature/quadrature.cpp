// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include "expvol/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>

#include "expvol/errors.hpp"
#include "expvol/simd/kernels.hpp"

namespace expvol {

namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss
// rule (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct CellEstimate {
    double integral;
    double error;
};

// Evaluate G7/K15 on [a,b].  Nodes are batched through Fn1D::eval so the
// SIMD-capable integrands vectorize the whole block.
CellEstimate gk15(const Fn1D& f, double a, double b, std::int64_t* evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double xs[15];
    double ys[15];
    for (int i = 0; i < 7; ++i) {
        xs[2 * i] = c - h * kXgk[i];
        xs[2 * i + 1] = c + h * kXgk[i];
    }
    xs[14] = c;
    f.eval(xs, ys, 15);
    *evals += 15;

    double resk = kWgk[7] * ys[14];
    double resg = kWg[3] * ys[14];
    double resabs = std::fabs(resk);
    for (int i = 0; i < 7; ++i) {
        const double pair = ys[2 * i] + ys[2 * i + 1];
        resk += kWgk[i] * pair;
        resabs += kWgk[i] * (std::fabs(ys[2 * i]) + std::fabs(ys[2 * i + 1]));
        if (i % 2 == 1) resg += kWg[i / 2] * pair;
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(ys[14] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::fabs(ys[2 * i] - mean) + std::fabs(ys[2 * i + 1] - mean));
    resasc *= h;
    resabs *= h;

    double err = std::fabs(resk - resg) * h;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(err, 50.0 * eps * resabs);

    if (!std::isfinite(resk))
        throw eval_error("quadrature: integrand returned a non-finite value");
    return {resk * h, err};
}

struct Cell {
    double a, b, integral, error;
    bool operator<(const Cell& o) const { return error < o.error; }
};

IntegralResult adapt(const Fn1D& f, double a, double b, const QuadConfig& cfg) {
    std::int64_t evals = 0;
    std::priority_queue<Cell> heap;
    CellEstimate e0 = gk15(f, a, b, &evals);
    double total = e0.integral;
    double toterr = e0.error;
    heap.push({a, b, e0.integral, e0.error});
    int splits = 0;
    bool resolution_limited = false;
    auto tol = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total)); };
    while (toterr > tol() && splits < cfg.max_subdivisions) {
        Cell worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            heap.push(worst);
            resolution_limited = true;
            break;
        }
        CellEstimate l = gk15(f, worst.a, mid, &evals);
        CellEstimate r = gk15(f, mid, worst.b, &evals);
        total += l.integral + r.integral - worst.integral;
        toterr += l.error + r.error - worst.error;
        heap.push({worst.a, mid, l.integral, l.error});
        heap.push({mid, worst.b, r.integral, r.error});
        ++splits;
    }
    if (toterr > tol() && !resolution_limited)
        throw convergence_error("quadrature: tolerance not reached within the subdivision budget",
                                total, toterr);
    return {total, toterr, evals, Method::nested};
}

} // namespace

void QuadConfig::validate() const {
    if (abs_tol <= 0 || rel_tol <= 0)
        throw param_error("QuadConfig: tolerances must be positive");
    if (truncation_drop <= 0 || truncation_drop >= 1)
        throw param_error("QuadConfig: truncation_drop must lie in (0,1)");
    if (nested_dim_cutoff < 1)
        throw param_error("QuadConfig: nested_dim_cutoff must be >= 1");
}

void Fn1D::eval(const double* x, double* y, std::size_t n) const {
    if (batch) {
        batch(x, y, n);
        return;
    }
    for (std::size_t i = 0; i < n; ++i) y[i] = f(x[i]);
}

namespace detail {

Window scan_window(const Fn1D& g, double center, double drop,
                   std::int64_t* evals) {
    // Coarse grid around the center to locate the peak, then doubling steps
    // outward until the integrand is negligible on three consecutive probes.
    double peak = 0.0;
    double peak_u = center;
    for (int i = -4; i <= 4; ++i) {
        const double u = center + 1.0 * i;
        const double v = std::fabs(g.f(u));
        ++*evals;
        if (v > peak) {
            peak = v;
            peak_u = u;
        }
    }
    if (peak == 0.0) {
        // Flat on the coarse grid; widen until something shows up.
        for (int j = 0; j < 40 && peak == 0.0; ++j) {
            const double step = 4.0 * std::pow(2.0, j);
            for (double sgn : {-1.0, 1.0}) {
                const double v = std::fabs(g.f(center + sgn * step));
                ++*evals;
                if (v > peak) {
                    peak = v;
                    peak_u = center + sgn * step;
                }
            }
        }
        if (peak == 0.0) return {center - 1.0, center + 1.0, 0.0};
    }
    const double cut = drop * peak;
    auto expand = [&](double dir) {
        double step = 0.5;
        double u = peak_u;
        int quiet = 0;
        for (int it = 0; it < 400; ++it) {
            u += dir * step;
            const double v = std::fabs(g.f(u));
            ++*evals;
            // a rising tail raises the recorded peak; the cut stays at the
            // original level, which can only widen the window
            if (v > peak) peak = v;
            quiet = (v < cut) ? quiet + 1 : 0;
            if (quiet >= 3) return u;
            if (it % 6 == 5) step *= 2.0;
        }
        return u;
    };
    double lo = expand(-1.0);
    double hi = expand(+1.0);
    return {lo, hi, peak};
}

} // namespace detail

IntegralResult integrate_halfline(const Fn1D& f, const QuadConfig& cfg,
                                  double center_hint) {
    cfg.validate();
    // t = e^u maps (0,inf) to the line; dt/t = du so g(u) = f(e^u) e^u.
    Fn1D g;
    g.f = [&f](double u) { return f.f(std::exp(u)) * std::exp(u); };
    if (f.batch) {
        g.batch = [&f](const double* u, double* y, std::size_t n) {
            std::vector<double> t(n);
            simd::vexp(u, t.data(), n);
            f.batch(t.data(), y, n);
            for (std::size_t i = 0; i < n; ++i) y[i] *= t[i];
        };
    }
    std::int64_t scan_evals = 0;
    auto w = detail::scan_window(g, center_hint, cfg.truncation_drop, &scan_evals);
    if (w.peak == 0.0) return {0.0, 0.0, scan_evals, Method::nested};
    IntegralResult r = adapt(g, w.lo, w.hi, cfg);
    r.evaluations += scan_evals;
    return r;
}

IntegralResult integrate_line(const Fn1D& f, const QuadConfig& cfg,
                              double center_hint) {
    cfg.validate();
    std::int64_t scan_evals = 0;
    auto w = detail::scan_window(f, center_hint, cfg.truncation_drop, &scan_evals);
    if (w.peak == 0.0) return {0.0, 0.0, scan_evals, Method::nested};
    IntegralResult r = adapt(f, w.lo, w.hi, cfg);
    r.evaluations += scan_evals;
    return r;
}

IntegralResult integrate_interval(const Fn1D& f, double a, double b,
                                  const QuadConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw param_error("integrate_interval: requires a < b");
    return adapt(f, a, b, cfg);
}

IntegralResult integrate_box(const FnND& f, std::span<const AxisDomain> domains,
                             const QuadConfig& cfg,
                             std::span<const double> center_hints) {
    cfg.validate();
    const int k = static_cast<int>(domains.size());
    if (k < 1) throw param_error("integrate_box: needs at least one axis");
    if (k > cfg.nested_dim_cutoff)
        throw param_error("integrate_box: dimension exceeds nested_dim_cutoff");
    QuadConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol / k;
    inner.rel_tol = cfg.rel_tol / k;

    std::vector<double> x(static_cast<std::size_t>(k));
    std::int64_t evals = 0;
    double outer_err = 0.0;

    // Recursive nesting: axis 0 outermost.
    std::function<double(int)> level = [&](int axis) -> double {
        Fn1D g;
        g.f = [&, axis](double t) {
            x[static_cast<std::size_t>(axis)] = t;
            if (axis + 1 == k) {
                ++evals;
                return f(x);
            }
            return level(axis + 1);
        };
        const double hint =
            center_hints.size() == static_cast<std::size_t>(k)
                ? center_hints[static_cast<std::size_t>(axis)] : 0.0;
        IntegralResult r;
        try {
            r = domains[static_cast<std::size_t>(axis)] == AxisDomain::halfline
                    ? integrate_halfline(g, inner, hint)
                    : integrate_line(g, inner, hint);
        } catch (const convergence_error& e) {
            throw convergence_error("integrate_box: axis " + std::to_string(axis) +
                                        ": " + e.what(),
                                    e.best_estimate, e.error_estimate);
        }
        if (axis == 0) outer_err = r.error_estimate;
        return r.value;
    };
    double v = level(0);
    // Inner levels contribute up to their own tolerance per outer node.
    const double err = outer_err + std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(v));
    return {v, err, evals, Method::nested};
}

IntegralResult integrate_mc(const FnND& f, const McProposal& proposal,
                            std::int64_t n, const QuadConfig& cfg) {
    cfg.validate();
    if (proposal.dim < 1 || !proposal.sample || !proposal.density)
        throw param_error("integrate_mc: incomplete proposal");
    if (n < 2) throw param_error("integrate_mc: needs at least 2 samples");
    std::vector<double> pt(static_cast<std::size_t>(proposal.dim));
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        proposal.sample(static_cast<std::uint64_t>(i), pt);
        const double fx = f(pt);
        double w = 0.0;
        if (fx != 0.0) {
            const double q = proposal.density(pt);
            if (!(q > 0.0))
                throw eval_error("integrate_mc: proposal density not positive at a sampled point");
            w = fx / q;
        }
        if (!std::isfinite(w))
            throw eval_error("integrate_mc: non-finite importance weight");
        const double d = w - mean;
        mean += d / static_cast<double>(i + 1);
        m2 += d * (w - mean);
    }
    const double var = m2 / static_cast<double>(n - 1);
    const double se = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
    return {mean, se, n, Method::monte_carlo};
}

} // namespace expvol
