// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include "expvol/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "expvol/detail/piecewise.hpp"
#include "expvol/errors.hpp"

namespace expvol {

namespace {

using detail::Piecewise;
using detail::Poly;
using detail::Rat;

bool all_nonpositive(std::span<const double> kappa) {
    for (double k : kappa)
        if (k > 0.0) return false;
    return true;
}

// G(x) = x^{d+1}/(d+1) as a polynomial.
Poly gpoly(int d) {
    Poly p;
    p.c.assign(static_cast<std::size_t>(d) + 2, Rat(0));
    p.c.back() = Rat(1, d + 1);
    return p;
}

// Density of S = b_1 + ... + b_{n-1} over the box prod [kappa_i, 0]
// (unnormalized: convolution of indicators).  For n = 2 this is the plain
// indicator of [kappa_1, 0].
Piecewise sum_density(const std::vector<Rat>& kap) {
    Piecewise rho = Piecewise::indicator(kap[0], Rat(0));
    for (std::size_t i = 1; i < kap.size(); ++i)
        rho = convolve_indicator(rho, kap[i]);
    return rho;
}

// F(S) = G(U - 2S) - G(max(0, L - 2S)) on [smin, smax], zero above U/2.
Piecewise inner_moment(const Rat& L, const Rat& U, int d, const Rat& smin,
                       const Rat& smax) {
    const Rat half = Rat(1, 2);
    std::vector<Rat> cuts = {smin, smax};
    const Rat l2 = L * half;
    const Rat u2 = U * half;
    if (smin < l2 && l2 < smax) cuts.push_back(l2);
    if (smin < u2 && u2 < smax) cuts.push_back(u2);
    std::sort(cuts.begin(), cuts.end(), [](const Rat& a, const Rat& b) { return a < b; });
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const Poly G = gpoly(d);
    Piecewise F;
    F.breaks = cuts;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rat mid = (cuts[i] + cuts[i + 1]) * half;
        Poly piece; // zero
        if (mid < u2) {
            // G(U - 2S)
            piece = compose_linear(G, U, Rat(-2));
            if (mid < l2) piece = piece - compose_linear(G, L, Rat(-2));
        }
        F.pieces.push_back(piece);
    }
    return F;
}

} // namespace

double tropical_crown_volume(std::span<const double> kappa) {
    if (kappa.empty()) throw param_error("tropical_crown_volume: empty kappa");
    if (!all_nonpositive(kappa)) return 0.0;
    double v = 2.0;
    for (double k : kappa) v *= -k;
    return v;
}

HPolytope tropical_crown_moment_polytope(std::span<const double> kappa) {
    const int n = static_cast<int>(kappa.size());
    if (n < 1) throw param_error("tropical polytope: empty kappa");
    HPolytope p;
    p.dim = n; // (b_1 .. b_{n-1}, l)
    double ksum = 0.0;
    for (int i = 0; i + 1 < n; ++i) ksum += kappa[static_cast<std::size_t>(i)];
    const double kn = kappa[static_cast<std::size_t>(n - 1)];
    auto row = [&](std::vector<double> a, double b) {
        p.constraints.push_back({std::move(a), b});
    };
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<double> up(static_cast<std::size_t>(n), 0.0);
        up[static_cast<std::size_t>(i)] = 1.0;
        row(up, 0.0); // b_i <= 0
        std::vector<double> dn(static_cast<std::size_t>(n), 0.0);
        dn[static_cast<std::size_t>(i)] = -1.0;
        row(dn, -kappa[static_cast<std::size_t>(i)]); // -b_i <= -kappa_i
    }
    // kn + ksum <= l + 2 sum b <= -kn + ksum
    std::vector<double> up(static_cast<std::size_t>(n), 2.0);
    up[static_cast<std::size_t>(n - 1)] = 1.0;
    row(up, -kn + ksum);
    std::vector<double> dn(static_cast<std::size_t>(n), -2.0);
    dn[static_cast<std::size_t>(n - 1)] = -1.0;
    row(dn, -(kn + ksum));
    // l >= 0
    std::vector<double> lpos(static_cast<std::size_t>(n), 0.0);
    lpos[static_cast<std::size_t>(n - 1)] = -1.0;
    row(lpos, 0.0);
    return p;
}

double tropical_crown_moment(std::span<const double> kappa, int d,
                             const QuadConfig& cfg) {
    const int n = static_cast<int>(kappa.size());
    if (n < 1) throw param_error("tropical_crown_moment: empty kappa");
    if (d < 0) throw param_error("tropical_crown_moment: d must be >= 0");
    if (!all_nonpositive(kappa)) return 0.0;

    // Exact path for n <= 3 with (numerically) rational kappa.
    if (n <= 3) {
        std::vector<Rat> kap;
        bool rational = true;
        for (double k : kappa) {
            if (auto r = detail::rat_from_double(k)) {
                kap.push_back(*r);
            } else {
                rational = false;
                break;
            }
        }
        if (rational) {
            Rat sum_prefix(0);
            for (int i = 0; i + 1 < n; ++i) sum_prefix = sum_prefix + kap[static_cast<std::size_t>(i)];
            const Rat kn = kap[static_cast<std::size_t>(n - 1)];
            const Rat L = kn + sum_prefix;
            const Rat U = -kn + sum_prefix;
            if (n == 1) {
                // moment = G(U) - G(max(0, L)); L <= 0 here.
                return gpoly(d).eval(U).to_double();
            }
            std::vector<Rat> prefix(kap.begin(), kap.end() - 1);
            const Piecewise rho = sum_density(prefix);
            const Piecewise F = inner_moment(L, U, d, rho.breaks.front(), rho.breaks.back());
            return multiply(F, rho).integral().to_double();
        }
    }
    // Monte-Carlo fallback over the moment polytope.
    const HPolytope poly = tropical_crown_moment_polytope(kappa);
    const int lidx = n - 1;
    auto weight = [d, lidx](std::span<const double> x) {
        double w = 1.0;
        for (int i = 0; i < d; ++i) w *= x[static_cast<std::size_t>(lidx)];
        return w;
    };
    auto r = polytope_integrate_mc(poly, weight, cfg.mc_samples, cfg.mc_seed);
    if (r.value != 0.0 && r.error_estimate > 0.05 * std::fabs(r.value))
        throw convergence_error("tropical_crown_moment: Monte-Carlo variance too large",
                                r.value, r.error_estimate);
    return r.value;
}

double tropical_crown_volume_fixed_length(std::span<const double> kappa, double l) {
    const int n = static_cast<int>(kappa.size());
    if (n < 1) throw param_error("tropical fixed-length volume: empty kappa");
    if (!all_nonpositive(kappa)) return 0.0;
    double ksum = 0.0;
    for (double k : kappa) ksum += k;
    const double kn = kappa[static_cast<std::size_t>(n - 1)];
    // n = 1: the fiber is a point; occupied iff kappa_1 <= -l <= -kappa_1.
    if (n == 1) return (l >= kappa[0] && l <= -kappa[0]) ? 1.0 : 0.0;
    // b_n = (ksum - l)/2 - S must lie in [kappa_n, 0]:
    // S in [(ksum - l)/2, (ksum - l)/2 - kappa_n]
    std::vector<Rat> prefix;
    for (int i = 0; i + 1 < n; ++i) {
        auto r = detail::rat_from_double(kappa[static_cast<std::size_t>(i)]);
        if (!r) throw param_error("tropical fixed-length volume: kappa must be rational");
        prefix.push_back(*r);
    }
    const Piecewise R = sum_density(prefix).antiderivative_fn();
    const double shift = 0.5 * (ksum - l);
    const double lo = shift;
    const double hi = shift - kn;
    auto evalR = [&](double x) {
        if (x <= R.breaks.front().to_double()) return 0.0;
        if (x >= R.breaks.back().to_double()) return R.eval(R.breaks.back().to_double());
        return R.eval(x);
    };
    return std::max(0.0, evalR(hi) - evalR(lo));
}

double tropical_exp_volume(const DecoratedSurface& s,
                           std::span<const std::span<const double>> kappa,
                           const QuadConfig& cfg, const ModelContext& ctx) {
    if (!validate_surface(s))
        throw param_error("tropical_exp_volume: invalid surface");
    const auto crowns = s.crown_indices();
    if (crowns.size() != static_cast<std::size_t>(s.num_boundaries()))
        throw param_error("tropical_exp_volume: all boundaries must be crowns");
    if (kappa.size() != crowns.size())
        throw param_error("tropical_exp_volume: one kappa sequence per crown");
    for (std::size_t j = 0; j < crowns.size(); ++j)
        if (static_cast<int>(kappa[j].size()) !=
            s.boundaries[static_cast<std::size_t>(crowns[j])])
            throw param_error("tropical_exp_volume: kappa arity mismatch");

    const VolumePolynomial& poly = ctx.table->at(s.genus, s.num_boundaries());
    const double C = ctx.constants.surface_constant(s);
    const int dim = poly.dim();
    double dimfact = 1.0;
    for (int i = 2; i <= dim; ++i) dimfact *= i;
    double total = 0.0;
    for (const auto& term : poly.terms) {
        int total_d = 0;
        for (int dj : term.d) total_d += dj;
        if (total_d != dim) continue; // top degree only
        double vstar = std::ldexp(term.coeff.to_double(), dim) * dimfact;
        double prod = 1.0;
        for (std::size_t j = 0; j < crowns.size(); ++j) {
            const int dj = term.d[static_cast<std::size_t>(crowns[j])];
            for (int i = 2; i <= dj; ++i) vstar /= i;
            prod *= tropical_crown_moment(kappa[j], 2 * dj + 1, cfg);
        }
        total += vstar * prod;
    }
    return C * total;
}

KontsevichReport kontsevich_check_g1n1() {
    KontsevichReport r;
    // V_{1,(1)} = 1/24 (the l^2 coefficient of the one-holed torus volume);
    // V* = 2^d d!/(d_1!) V with d = d_1 = 1.
    r.vstar = 2.0 * (1.0 / 24.0);
    r.rho = 4.0 * 0.5; // 4^d 2^{-g}, d = 1, g = 1
    // Vol^t(M_S(L)) = d_S rho_S V* l^2; the intersection-theory side is
    // int psi_1 = 1/24 per l^2.  With d_S unknown beyond spheres we report
    // the d_S = 1 value; the discrepancy must be a power of 2.
    r.tropical_coeff = r.vstar; // rho^{-1} * (rho * d_S * V*), d_S = 1
    r.psi_target = 1.0 / 24.0;
    r.ratio = r.tropical_coeff / r.psi_target;
    r.log2_ratio = std::log2(r.ratio);
    return r;
}

} // namespace expvol
