// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace expvol {

// Topological datum: genus plus the number of marked points on each boundary
// component (0 marks a puncture / geodesic circle, n > 0 a crown with n cusps).
struct DecoratedSurface {
    int genus = 0;
    std::vector<int> boundaries;

    int num_boundaries() const { return static_cast<int>(boundaries.size()); }
    int num_crowns() const;
    int total_cusps() const;
    // Indices of the crown (resp. circle) boundary components, in order.
    std::vector<int> crown_indices() const;
    std::vector<int> circle_indices() const;
};

// true iff the surface admits an ideal hyperbolic structure.
bool validate_surface(const DecoratedSurface& s);

// dim of the moduli space after freezing K-coordinates and boundary lengths.
int moduli_dimension(const DecoratedSurface& s, int frozen_k, int fixed_lengths);

// Positive K-parameters, one sequence per crown (same order as crown_indices).
struct CrownParams {
    std::vector<std::vector<double>> per_crown;

    void validate(const DecoratedSurface& s) const;
};

// Boundary lengths l_j and their exponentials.  Entries for crown boundaries
// are ignored by the recursion ops (the crown length is integrated out).
struct BoundaryLengths {
    std::vector<double> l;

    double Lambda(int j) const;
    void validate(const DecoratedSurface& s) const;
};

// Descriptor of a neck cut: which crown is cut off, and how many one-holed
// torus components the cut produces.
struct NeckCut {
    int crown_index = 0;
    int tori_cut_off = 0;     // mu_ell
    int components_before = 1;
    int components_after = 2;
};

// Constants entering the neck recursion: C_{S,ell} = 2^{-mu} c_{S,ell}.
// The default c follows the power-of-two rule pinned by the worked surfaces;
// individual cuts can be overridden, keeping each factor independently
// falsifiable by the identity tests.
struct RecursionConstants {
    std::map<std::string, double> overrides; // key: surface_key(s) + ":" + crown index

    double cutting_constant(const DecoratedSurface& s, const NeckCut& cut) const;
    double surface_constant(const DecoratedSurface& s) const; // product over crowns
};

std::string surface_key(const DecoratedSurface& s);

// Builds the neck-cut descriptor for cutting crown `crown_index` off `s`.
NeckCut neck_cut_for_crown(const DecoratedSurface& s, int crown_index);

// d_S: ratio of the cluster volume form to the Weil-Petersson form.  Known
// exactly for n-punctured spheres; nullopt otherwise.
std::optional<double> cluster_wp_ratio(const DecoratedSurface& s);

} // namespace expvol
