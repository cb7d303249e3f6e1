// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <vector>

#include "expvol/quadrature.hpp"
#include "expvol/types.hpp"
#include "expvol/volume_polynomial.hpp"

namespace expvol {

struct LaplaceArgs {
    std::vector<double> s; // one per boundary component
    double hbar = 1.0;
};

enum class BPath { operator_path, recursion_integral };

struct BFunctionResult {
    double value = 0.0;
    BPath path_tag = BPath::operator_path;
    double error_estimate = 0.0; // discrepancy between the two paths
};

struct ModelContext {
    const VolumeTable* table = &VolumeTable::global();
    RecursionConstants constants;
};

// Exponential volume of the moduli space: the neck recursion assembles crown
// moments against the Mirzakhani polynomial of the cut surface, with the
// fixed circle lengths substituted.
double exp_volume(const DecoratedSurface& s, const CrownParams& K,
                  const BoundaryLengths& lengths, const QuadConfig& cfg = {},
                  const ModelContext& ctx = {});

// Laplace transform over the ordinary moduli space (half-line crown lengths);
// circle boundaries contribute (2k)! (2/s)^{2k+1}.
double l_function(const DecoratedSurface& s, const CrownParams& K,
                  const LaplaceArgs& sargs, const QuadConfig& cfg = {},
                  const ModelContext& ctx = {});

// B-function over the enhanced cover, computed along BOTH routes: the
// differential operator applied to the Bessel product, and the recursion
// integral with signed crown moments.  Returns the operator value; the
// discrepancy is reported as error_estimate.
BFunctionResult b_function(const DecoratedSurface& s, const CrownParams& K,
                           const LaplaceArgs& sargs, const QuadConfig& cfg = {},
                           const ModelContext& ctx = {});

// Annulus A_{0,2}: exponential volume by cutting at the cusp (one triangle
// plus a trouser leg).
double vol_A02(double K1, double K2, double Lambda, const QuadConfig& cfg = {});

// Annulus A_{1,1}: the neck-recursion and unfolding routes for the same
// volume.  Their pointwise ratio is the measured check of the paper's
// equality problem.
double vol_A11_neck(double K1, double K2, const QuadConfig& cfg = {});
double vol_A11_unfold(double K1, double K2, const QuadConfig& cfg = {});

} // namespace expvol
