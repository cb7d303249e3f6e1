// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <string>
#include <vector>

namespace expvol {

// Cluster Poisson seed.  The first n_unfrozen coordinates mutate; the rest
// are frozen (B- and K-type variables).  eps is the full skew-symmetric
// integer exchange matrix on all coordinates.
struct Seed {
    int n_unfrozen = 0;
    std::vector<std::string> names;
    std::vector<double> x;
    std::vector<std::vector<int>> eps;

    int size() const { return static_cast<int>(x.size()); }
    void check() const; // shape + positivity + skew-symmetry
    double var(const std::string& name) const;
};

// X-type cluster Poisson mutation at unfrozen index k:
//   X_k -> 1/X_k,
//   X_j -> X_j (1 + X_k)^{eps_jk}        if eps_jk >= 0,
//   X_j -> X_j (1 + X_k^{-1})^{eps_jk}   if eps_jk < 0,
// and the standard matrix rule for eps.
Seed mutate(const Seed& seed, int k);

// --- the annulus A_{1,1} chart ------------------------------------------
//
// Coordinates (X, Y | B1, B2) with eps_XY = 2, eps_{Bi X} = 1, eps_{Bi Y} = -1.
// Frozen K_i = B_i^2 X Y; trace function t = (XY)^{-1/2}(1 + X + XY).

// Seed with K_1 = B_1^2 XY, K_2 = B_2^2 XY and trace Lambda^{1/2} +
// Lambda^{-1/2}; requires Lambda > 1.
Seed make_seed_A11(double K1, double K2, double Lambda);

// Dehn twist: mutation at Y followed by the (X, Y) relabeling.  Preserves
// K_1, K_2, the trace and the potential W_1 = B_1 (1 + X + XY).
Seed dehn_twist_A11(const Seed& seed);
Seed dehn_twist_A11_inverse(const Seed& seed);

double trace_A11(const Seed& seed);        // (XY)^{-1/2} (1 + X + XY)
double potential_W1_A11(const Seed& seed); // B1 (1 + X + XY)
double frozen_K_A11(const Seed& seed, int i); // B_i^2 X Y, i in {1, 2}

// --- elementary potentials ------------------------------------------------

struct TrianglePotentials {
    double K_a, K_b, K_p;
};

struct TrianglePotentialResult {
    double W_p;     // sqrt(K_a K_b / K_p)
    double W_total; // symmetric sum over the three cusps
};

TrianglePotentialResult triangle_potential(const TrianglePotentials& tp);

struct TrouserLeg {
    double K;
    double l;
};

struct TrouserLegPotentials {
    double W;       // sqrt(K)(Lambda^{1/2} + Lambda^{-1/2})
    double Q;       // sqrt(K) Lambda^{-1/2}
    double R;       // = W (boundary-circle case)
    double Rprime;  // sqrt(K)(Lambda^{1/2} - Lambda^{-1/2}); R = Rprime + 2Q
};

TrouserLegPotentials trouser_leg_potential(const TrouserLeg& t);

// --- McShane partial sums on A_{1,1} --------------------------------------

struct McShaneResult {
    double partial;
    double target; // sqrt(K1)(Lambda^{1/2} - Lambda^{-1/2})
};

// Sums the triangle gap terms W_{p,n} = sqrt(K1 X_n / Y_n) over |n| <= N
// Dehn-twist images of the seed arcs.
McShaneResult mcshane_partial_sum_A11(double K1, double K2, double Lambda, int N);

// Partial sums for N = 0..N_max (index = N), for the convergence tests.
std::vector<double> mcshane_partial_sums_A11(double K1, double K2, double Lambda,
                                             int N_max);

} // namespace expvol
