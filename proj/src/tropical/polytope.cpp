// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include "expvol/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "expvol/detail/rng.hpp"
#include "expvol/errors.hpp"
#include "expvol/simd/kernels.hpp"

namespace expvol {

void HPolytope::check() const {
    if (dim < 1) throw param_error("HPolytope: dimension must be >= 1");
    for (const auto& c : constraints)
        if (static_cast<int>(c.a.size()) != dim)
            throw param_error("HPolytope: constraint arity != dim");
}

bool HPolytope::contains(std::span<const double> x, double tol) const {
    for (const auto& c : constraints) {
        double dot = 0.0;
        for (int d = 0; d < dim; ++d)
            dot += c.a[static_cast<std::size_t>(d)] * x[static_cast<std::size_t>(d)];
        if (dot > c.b + tol) return false;
    }
    return true;
}

std::string HPolytope::to_json() const {
    nlohmann::json j;
    j["dim"] = dim;
    j["constraints"] = nlohmann::json::array();
    for (const auto& c : constraints)
        j["constraints"].push_back({{"normal", c.a}, {"offset", c.b}});
    return j.dump();
}

HPolytope HPolytope::from_json(const std::string& text) {
    HPolytope p;
    try {
        const auto j = nlohmann::json::parse(text);
        p.dim = j.at("dim").get<int>();
        for (const auto& jc : j.at("constraints")) {
            Constraint c;
            c.a = jc.at("normal").get<std::vector<double>>();
            c.b = jc.at("offset").get<double>();
            p.constraints.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw param_error(std::string("HPolytope: bad JSON: ") + e.what());
    }
    p.check();
    return p;
}

namespace {

// Dense two-phase tableau simplex, Bland's rule.  Free variables are split
// x = u - v; slacks make rows equalities; rows with negative right-hand side
// get an artificial variable for phase 1.  Small systems only.
class Simplex {
public:
    Simplex(const HPolytope& p, std::span<const double> c) {
        const int d = p.dim;
        nrow_ = static_cast<int>(p.constraints.size());
        nstruct_ = 2 * d + nrow_; // split vars + slacks
        std::vector<int> art_rows;
        for (int r = 0; r < nrow_; ++r)
            if (p.constraints[static_cast<std::size_t>(r)].b < 0.0) art_rows.push_back(r);
        nart_ = static_cast<int>(art_rows.size());
        ncol_ = nstruct_ + nart_;
        tab_.assign(static_cast<std::size_t>(nrow_) * (ncol_ + 1), 0.0);
        basis_.resize(static_cast<std::size_t>(nrow_));

        int art = 0;
        for (int r = 0; r < nrow_; ++r) {
            const auto& con = p.constraints[static_cast<std::size_t>(r)];
            const double sgn = con.b < 0.0 ? -1.0 : 1.0;
            for (int j = 0; j < d; ++j) {
                at(r, j) = sgn * con.a[static_cast<std::size_t>(j)];
                at(r, d + j) = -sgn * con.a[static_cast<std::size_t>(j)];
            }
            at(r, 2 * d + r) = sgn; // slack
            at(r, ncol_) = sgn * con.b;
            if (con.b < 0.0) {
                at(r, nstruct_ + art) = 1.0;
                basis_[static_cast<std::size_t>(r)] = nstruct_ + art;
                ++art;
            } else {
                basis_[static_cast<std::size_t>(r)] = 2 * d + r;
            }
        }
        obj_.assign(static_cast<std::size_t>(ncol_), 0.0);
        for (int j = 0; j < d; ++j) {
            obj_[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
            obj_[static_cast<std::size_t>(d + j)] = -c[static_cast<std::size_t>(j)];
        }
    }

    LpResult solve() {
        if (nart_ > 0) {
            std::vector<double> phase1(static_cast<std::size_t>(ncol_), 0.0);
            for (int j = nstruct_; j < ncol_; ++j) phase1[static_cast<std::size_t>(j)] = -1.0;
            run(phase1, /*allow_artificials=*/true); // bounded below by 0
            double art_sum = 0.0;
            for (int r = 0; r < nrow_; ++r)
                if (basis_[static_cast<std::size_t>(r)] >= nstruct_) art_sum += at(r, ncol_);
            if (art_sum > 1e-9) return {LpStatus::infeasible, 0.0, {}};
            // Drive leftover zero-level artificials out of the basis where a
            // pivot exists; rows that fail are redundant and stay harmless.
            for (int r = 0; r < nrow_; ++r) {
                if (basis_[static_cast<std::size_t>(r)] < nstruct_) continue;
                for (int j = 0; j < nstruct_; ++j)
                    if (std::fabs(at(r, j)) > 1e-9) {
                        pivot(r, j);
                        break;
                    }
            }
        }
        if (!run(obj_, /*allow_artificials=*/false)) return {LpStatus::unbounded, 0.0, {}};
        LpResult res;
        res.status = LpStatus::optimal;
        std::vector<double> full(static_cast<std::size_t>(ncol_), 0.0);
        for (int r = 0; r < nrow_; ++r)
            full[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] = at(r, ncol_);
        const int d = (nstruct_ - nrow_) / 2;
        res.x.resize(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            res.x[static_cast<std::size_t>(j)] =
                full[static_cast<std::size_t>(j)] - full[static_cast<std::size_t>(d + j)];
        res.value = 0.0;
        for (int j = 0; j < ncol_; ++j)
            res.value += obj_[static_cast<std::size_t>(j)] * full[static_cast<std::size_t>(j)];
        return res;
    }

private:
    double& at(int r, int j) {
        return tab_[static_cast<std::size_t>(r) * (ncol_ + 1) + static_cast<std::size_t>(j)];
    }

    void pivot(int pr, int pc) {
        const double pv = at(pr, pc);
        for (int j = 0; j <= ncol_; ++j) at(pr, j) /= pv;
        for (int r = 0; r < nrow_; ++r) {
            if (r == pr) continue;
            const double factor = at(r, pc);
            if (factor == 0.0) continue;
            for (int j = 0; j <= ncol_; ++j) at(r, j) -= factor * at(pr, j);
        }
        basis_[static_cast<std::size_t>(pr)] = pc;
    }

    // returns false on unboundedness
    bool run(const std::vector<double>& c, bool allow_artificials) {
        const int limit = allow_artificials ? ncol_ : nstruct_;
        for (int iter = 0; iter < 50000; ++iter) {
            int enter = -1;
            for (int j = 0; j < limit; ++j) {
                double red = c[static_cast<std::size_t>(j)];
                for (int r = 0; r < nrow_; ++r)
                    red -= c[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] * at(r, j);
                if (red > 1e-9) { // Bland: first improving column
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int r = 0; r < nrow_; ++r) {
                if (at(r, enter) > 1e-12) {
                    const double ratio = at(r, ncol_) / at(r, enter);
                    if (ratio < best - 1e-15 ||
                        (std::fabs(ratio - best) <= 1e-15 && leave >= 0 &&
                         basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
                        best = ratio;
                        leave = r;
                    }
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
        throw eval_error("lp_maximize: simplex iteration limit");
    }

    int nrow_, nstruct_, nart_, ncol_;
    std::vector<double> tab_;
    std::vector<double> obj_;
    std::vector<int> basis_;
};

} // namespace

LpResult lp_maximize(const HPolytope& p, std::span<const double> c) {
    p.check();
    if (static_cast<int>(c.size()) != p.dim)
        throw param_error("lp_maximize: objective arity != dim");
    if (p.constraints.empty()) return {LpStatus::unbounded, 0.0, {}};
    Simplex s(p, c);
    return s.solve();
}

double Box::volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
    return v;
}

Box bounding_box(const HPolytope& p) {
    p.check();
    Box box;
    box.lo.resize(static_cast<std::size_t>(p.dim));
    box.hi.resize(static_cast<std::size_t>(p.dim));
    std::vector<double> c(static_cast<std::size_t>(p.dim), 0.0);
    for (int d = 0; d < p.dim; ++d) {
        c[static_cast<std::size_t>(d)] = 1.0;
        LpResult up = lp_maximize(p, c);
        c[static_cast<std::size_t>(d)] = -1.0;
        LpResult dn = lp_maximize(p, c);
        c[static_cast<std::size_t>(d)] = 0.0;
        if (up.status == LpStatus::unbounded || dn.status == LpStatus::unbounded)
            throw param_error("polytope is unbounded along axis " + std::to_string(d));
        if (up.status == LpStatus::infeasible || dn.status == LpStatus::infeasible) {
            box.lo.assign(static_cast<std::size_t>(p.dim), 0.0);
            box.hi.assign(static_cast<std::size_t>(p.dim), 0.0);
            return box; // empty polytope
        }
        box.hi[static_cast<std::size_t>(d)] = up.value;
        box.lo[static_cast<std::size_t>(d)] = -dn.value;
    }
    return box;
}

IntegralResult polytope_integrate_mc(const HPolytope& p,
                                     const std::function<double(std::span<const double>)>& w,
                                     std::int64_t n, std::uint64_t seed) {
    p.check();
    if (n < 2) throw param_error("polytope_integrate_mc: needs at least 2 samples");
    const Box box = bounding_box(p);
    const double bv = box.volume();
    if (bv <= 0.0) return {0.0, 0.0, 0, Method::monte_carlo};

    std::vector<double> pt(static_cast<std::size_t>(p.dim));
    double mean = 0.0, m2 = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        for (int d = 0; d < p.dim; ++d) {
            const double u = detail::uniform01(seed, static_cast<std::uint64_t>(i),
                                               static_cast<std::uint64_t>(d));
            pt[static_cast<std::size_t>(d)] =
                box.lo[static_cast<std::size_t>(d)] +
                u * (box.hi[static_cast<std::size_t>(d)] - box.lo[static_cast<std::size_t>(d)]);
        }
        const double v = p.contains(pt, 0.0) ? w(pt) : 0.0;
        const double d0 = v - mean;
        mean += d0 / static_cast<double>(i + 1);
        m2 += d0 * (v - mean);
    }
    const double var = m2 / static_cast<double>(n - 1);
    return {bv * mean, bv * std::sqrt(std::max(0.0, var) / static_cast<double>(n)), n,
            Method::monte_carlo};
}

IntegralResult polytope_volume_mc(const HPolytope& p, std::int64_t n,
                                  std::uint64_t seed) {
    // Batched membership counting through the SIMD kernel.
    p.check();
    if (n < 2) throw param_error("polytope_volume_mc: needs at least 2 samples");
    const Box box = bounding_box(p);
    const double bv = box.volume();
    if (bv <= 0.0) return {0.0, 0.0, 0, Method::monte_carlo};

    const std::size_t nrows = p.constraints.size();
    std::vector<double> A(nrows * static_cast<std::size_t>(p.dim));
    std::vector<double> b(nrows);
    for (std::size_t r = 0; r < nrows; ++r) {
        for (int d = 0; d < p.dim; ++d)
            A[r * static_cast<std::size_t>(p.dim) + static_cast<std::size_t>(d)] =
                p.constraints[r].a[static_cast<std::size_t>(d)];
        b[r] = p.constraints[r].b;
    }

    constexpr std::size_t kBlock = 4096;
    std::vector<std::vector<double>> coords(static_cast<std::size_t>(p.dim));
    std::vector<const double*> ptrs(static_cast<std::size_t>(p.dim));
    std::size_t inside = 0;
    std::int64_t done = 0;
    while (done < n) {
        const std::size_t cnt = static_cast<std::size_t>(std::min<std::int64_t>(kBlock, n - done));
        for (int d = 0; d < p.dim; ++d) {
            auto& col = coords[static_cast<std::size_t>(d)];
            col.resize(cnt);
            for (std::size_t i = 0; i < cnt; ++i) {
                const double u =
                    detail::uniform01(seed, static_cast<std::uint64_t>(done + static_cast<std::int64_t>(i)),
                                      static_cast<std::uint64_t>(d));
                col[i] = box.lo[static_cast<std::size_t>(d)] +
                         u * (box.hi[static_cast<std::size_t>(d)] - box.lo[static_cast<std::size_t>(d)]);
            }
            ptrs[static_cast<std::size_t>(d)] = col.data();
        }
        inside += simd::count_inside_halfspaces(ptrs.data(), cnt,
                                                static_cast<std::size_t>(p.dim), A.data(),
                                                b.data(), nrows);
        done += static_cast<std::int64_t>(cnt);
    }
    const double phat = static_cast<double>(inside) / static_cast<double>(n);
    const double se = std::sqrt(std::max(0.0, phat * (1.0 - phat) / static_cast<double>(n)));
    return {bv * phat, bv * se, n, Method::monte_carlo};
}

} // namespace expvol
