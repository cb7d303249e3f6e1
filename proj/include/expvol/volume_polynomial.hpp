// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "expvol/types.hpp"

namespace expvol {

// Exact rational p/q with q > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational parse(const std::string& s); // "p/q" or "p"
    double to_double() const;
    std::string str() const;
};

// One coefficient of a Mirzakhani volume polynomial: rational * pi^{2p}
// attached to the monomial l_1^{2d_1} ... l_m^{2d_m}.
struct VolumeTerm {
    std::vector<int> d;
    Rational coeff;
    int pi_power = 0; // exponent p in pi^{2p}
};

struct VolumePolynomial {
    int g = 0;
    int m = 0;
    std::vector<VolumeTerm> terms;

    int dim() const { return 3 * g - 3 + m; } // top half-degree
    void check_grading() const;               // pi_power == dim - |d|, all d >= 0
};

// evaluates sum_terms coeff * pi^{2p} * prod l_j^{2 d_j}
double eval_volume_polynomial(const VolumePolynomial& p, const BoundaryLengths& lengths);

// Table of validated volume polynomials keyed by (g, m).
class VolumeTable {
public:
    // The two entries anchored in the literature: V_{0,3} = 1 and
    // V_{1,1} = pi^2/6 + l^2/24.
    static VolumeTable builtin();

    // Loads a JSON file (schema: {"polynomials": [{g, m, terms: [{d, rational,
    // pi_power}]}]}).  Every entry must agree with a validated reference, the
    // built-in table; unvalidated entries are rejected.
    static VolumeTable load(const std::string& path);

    // builtin(), or load(EXPVOL_DATA) when that environment variable is set.
    static const VolumeTable& global();

    bool contains(int g, int m) const;
    const VolumePolynomial& at(int g, int m) const; // data_error if missing

    std::vector<const VolumePolynomial*> all() const;

private:
    std::map<std::pair<int, int>, VolumePolynomial> entries_;
};

} // namespace expvol
