// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include "expvol/types.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "expvol/errors.hpp"

namespace expvol {

int DecoratedSurface::num_crowns() const {
    int r = 0;
    for (int n : boundaries) r += (n > 0) ? 1 : 0;
    return r;
}

int DecoratedSurface::total_cusps() const {
    int c = 0;
    for (int n : boundaries) c += n;
    return c;
}

std::vector<int> DecoratedSurface::crown_indices() const {
    std::vector<int> out;
    for (int j = 0; j < num_boundaries(); ++j)
        if (boundaries[static_cast<std::size_t>(j)] > 0) out.push_back(j);
    return out;
}

std::vector<int> DecoratedSurface::circle_indices() const {
    std::vector<int> out;
    for (int j = 0; j < num_boundaries(); ++j)
        if (boundaries[static_cast<std::size_t>(j)] == 0) out.push_back(j);
    return out;
}

bool validate_surface(const DecoratedSurface& s) {
    if (s.genus < 0) return false;
    for (int n : s.boundaries)
        if (n < 0) return false;
    const int m = s.num_boundaries();
    if (m < 1) return false; // closed surfaces carry no decoration
    if (s.genus >= 1) return true;
    // Sphere pieces: a disc needs at least 3 marked points to be an ideal
    // polygon, an annulus needs at least one marked point, and three or more
    // boundary components always work.
    if (m == 1) return s.boundaries[0] >= 3;
    if (m == 2) return s.boundaries[0] + s.boundaries[1] >= 1;
    return true;
}

int moduli_dimension(const DecoratedSurface& s, int frozen_k, int fixed_lengths) {
    const int m = s.num_boundaries();
    return 6 * s.genus - 6 + 3 * m + 2 * s.total_cusps() - frozen_k - fixed_lengths;
}

void CrownParams::validate(const DecoratedSurface& s) const {
    const auto crowns = s.crown_indices();
    if (per_crown.size() != crowns.size())
        throw param_error("CrownParams: one K-sequence per crown required");
    for (std::size_t i = 0; i < crowns.size(); ++i) {
        const int n = s.boundaries[static_cast<std::size_t>(crowns[i])];
        if (static_cast<int>(per_crown[i].size()) != n)
            throw param_error("CrownParams: K arity does not match cusp count");
        for (double k : per_crown[i])
            if (!(k > 0.0)) throw param_error("CrownParams: K must be positive");
    }
}

double BoundaryLengths::Lambda(int j) const {
    return std::exp(l.at(static_cast<std::size_t>(j)));
}

void BoundaryLengths::validate(const DecoratedSurface& s) const {
    if (static_cast<int>(l.size()) != s.num_boundaries())
        throw param_error("BoundaryLengths: arity mismatch");
    for (int j : s.circle_indices())
        if (l[static_cast<std::size_t>(j)] < 0.0)
            throw param_error("BoundaryLengths: geodesic circle lengths must be >= 0");
}

std::string surface_key(const DecoratedSurface& s) {
    std::ostringstream os;
    os << "g" << s.genus << ":b";
    for (std::size_t i = 0; i < s.boundaries.size(); ++i)
        os << (i ? "," : "") << s.boundaries[i];
    return os.str();
}

NeckCut neck_cut_for_crown(const DecoratedSurface& s, int crown_index) {
    const auto crowns = s.crown_indices();
    if (crown_index < 0 || crown_index >= static_cast<int>(crowns.size()))
        throw param_error("neck_cut_for_crown: no such crown");
    NeckCut cut;
    cut.crown_index = crown_index;
    cut.components_before = 1;
    cut.components_after = 2; // crown piece plus the rest
    // The complement of the crown: same genus, crown boundary becomes a circle.
    DecoratedSurface rest = s;
    rest.boundaries[static_cast<std::size_t>(crowns[static_cast<std::size_t>(crown_index)])] = 0;
    cut.tori_cut_off =
        (rest.genus == 1 && rest.num_boundaries() == 1 && rest.total_cusps() == 0) ? 1 : 0;
    return cut;
}

double RecursionConstants::cutting_constant(const DecoratedSurface& s,
                                            const NeckCut& cut) const {
    if (cut.components_after < cut.components_before)
        throw param_error("cutting_constant: invalid cut descriptor");
    std::ostringstream os;
    os << surface_key(s) << ":" << cut.crown_index;
    if (auto it = overrides.find(os.str()); it != overrides.end()) return it->second;
    // Default: 2^{-mu} * c with c = 2^{mu + pi0(S) - pi0(S - gamma)}, so that a
    // separating neck cut contributes 1/2.  This is the sign of the power-of-2
    // rule that reproduces the crowned pair of pants, the once crowned torus
    // and the annulus A_{1,1}.
    const int p = cut.components_before - cut.components_after;
    return std::ldexp(1.0, p);
}

double RecursionConstants::surface_constant(const DecoratedSurface& s) const {
    const auto crowns = s.crown_indices();
    double c = 1.0;
    for (int i = 0; i < static_cast<int>(crowns.size()); ++i)
        c *= cutting_constant(s, neck_cut_for_crown(s, i));
    return c;
}

std::optional<double> cluster_wp_ratio(const DecoratedSurface& s) {
    // d_S = 2^{-(n-3)} for the sphere with n punctures.
    if (s.genus == 0 && s.total_cusps() == 0 && s.num_boundaries() >= 3)
        return std::ldexp(1.0, -(s.num_boundaries() - 3));
    return std::nullopt;
}

} // namespace expvol
