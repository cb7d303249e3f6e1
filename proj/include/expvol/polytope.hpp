// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "expvol/quadrature.hpp"

namespace expvol {

// Affine inequality system A x <= b.
struct HPolytope {
    struct Constraint {
        std::vector<double> a;
        double b = 0.0;
    };
    int dim = 0;
    std::vector<Constraint> constraints;

    void check() const;
    bool contains(std::span<const double> x, double tol = 1e-12) const;

    std::string to_json() const;
    static HPolytope from_json(const std::string& text);
};

// Two-phase dense simplex for max c.x subject to A x <= b (x free).
enum class LpStatus { optimal, unbounded, infeasible };
struct LpResult {
    LpStatus status;
    double value = 0.0;
    std::vector<double> x;
};
LpResult lp_maximize(const HPolytope& p, std::span<const double> c);

// Axis-aligned bounding box via 2*dim LP probes; param_error when the
// polytope is unbounded along some axis.
struct Box {
    std::vector<double> lo, hi;
    double volume() const;
};
Box bounding_box(const HPolytope& p);

// Rejection-sampled Lebesgue volume using the LP bounding box.
IntegralResult polytope_volume_mc(const HPolytope& p, std::int64_t n,
                                  std::uint64_t seed);

// Same machinery for int_P w(x) dx.
IntegralResult polytope_integrate_mc(const HPolytope& p,
                                     const std::function<double(std::span<const double>)>& w,
                                     std::int64_t n, std::uint64_t seed);

} // namespace expvol
