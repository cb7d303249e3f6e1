// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include "expvol/volume_polynomial.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <numeric>

#include <json.hpp>

#include "expvol/errors.hpp"

namespace expvol {

Rational Rational::parse(const std::string& s) {
    Rational r;
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            r.num = std::stoll(s);
            r.den = 1;
        } else {
            r.num = std::stoll(s.substr(0, slash));
            r.den = std::stoll(s.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw data_error("Rational: cannot parse '" + s + "'");
    }
    if (r.den == 0) throw data_error("Rational: zero denominator in '" + s + "'");
    if (r.den < 0) {
        r.den = -r.den;
        r.num = -r.num;
    }
    const auto g = std::gcd(std::llabs(r.num), r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

double Rational::to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

void VolumePolynomial::check_grading() const {
    const int top = dim();
    for (const auto& t : terms) {
        if (static_cast<int>(t.d.size()) != m)
            throw data_error("VolumePolynomial: exponent arity != m");
        int total = 0;
        for (int di : t.d) {
            if (di < 0) throw data_error("VolumePolynomial: negative exponent");
            total += di;
        }
        if (total > top)
            throw data_error("VolumePolynomial: degree exceeds 6g-6+2m");
        if (t.pi_power != top - total)
            throw data_error("VolumePolynomial: pi-grading violated (expected pi^{2(dim-|d|)})");
    }
}

double eval_volume_polynomial(const VolumePolynomial& p, const BoundaryLengths& lengths) {
    if (static_cast<int>(lengths.l.size()) != p.m)
        throw param_error("eval_volume_polynomial: length arity != m");
    const double pi2 = std::numbers::pi * std::numbers::pi;
    double sum = 0.0;
    for (const auto& t : p.terms) {
        double term = t.coeff.to_double() * std::pow(pi2, t.pi_power);
        for (int j = 0; j < p.m; ++j) {
            const double lj = lengths.l[static_cast<std::size_t>(j)];
            for (int e = 0; e < t.d[static_cast<std::size_t>(j)]; ++e) term *= lj * lj;
        }
        sum += term;
    }
    return sum;
}

namespace {

VolumePolynomial make_V03() {
    VolumePolynomial p;
    p.g = 0;
    p.m = 3;
    p.terms = {{{0, 0, 0}, {1, 1}, 0}};
    p.check_grading();
    return p;
}

VolumePolynomial make_V11() {
    VolumePolynomial p;
    p.g = 1;
    p.m = 1;
    p.terms = {{{0}, {1, 6}, 1}, {{1}, {1, 24}, 0}};
    p.check_grading();
    return p;
}

bool same_polynomial(const VolumePolynomial& a, const VolumePolynomial& b) {
    if (a.g != b.g || a.m != b.m || a.terms.size() != b.terms.size()) return false;
    for (const auto& ta : a.terms) {
        bool found = false;
        for (const auto& tb : b.terms) {
            if (ta.d == tb.d) {
                found = ta.coeff.num == tb.coeff.num && ta.coeff.den == tb.coeff.den &&
                        ta.pi_power == tb.pi_power;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

} // namespace

VolumeTable VolumeTable::builtin() {
    VolumeTable t;
    t.entries_[{0, 3}] = make_V03();
    t.entries_[{1, 1}] = make_V11();
    return t;
}

VolumeTable VolumeTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("VolumeTable: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw data_error("VolumeTable: bad JSON in " + path + ": " + e.what());
    }
    const VolumeTable reference = builtin();
    VolumeTable t;
    for (const auto& jp : j.at("polynomials")) {
        VolumePolynomial p;
        p.g = jp.at("g").get<int>();
        p.m = jp.at("m").get<int>();
        for (const auto& jt : jp.at("terms")) {
            VolumeTerm term;
            term.d = jt.at("d").get<std::vector<int>>();
            term.coeff = Rational::parse(jt.at("rational").get<std::string>());
            term.pi_power = jt.at("pi_power").get<int>();
            p.terms.push_back(std::move(term));
        }
        p.check_grading();
        // Entries must match a validated reference; anything else is rejected
        // rather than trusted.
        if (!reference.contains(p.g, p.m) || !same_polynomial(p, reference.at(p.g, p.m)))
            throw data_error("VolumeTable: entry (g=" + std::to_string(p.g) + ", m=" +
                             std::to_string(p.m) +
                             ") does not match a validated reference polynomial");
        t.entries_[{p.g, p.m}] = std::move(p);
    }
    return t;
}

const VolumeTable& VolumeTable::global() {
    static const VolumeTable table = [] {
        if (const char* path = std::getenv("EXPVOL_DATA")) return load(path);
        return builtin();
    }();
    return table;
}

bool VolumeTable::contains(int g, int m) const {
    return entries_.count({g, m}) > 0;
}

const VolumePolynomial& VolumeTable::at(int g, int m) const {
    auto it = entries_.find({g, m});
    if (it == entries_.end())
        throw data_error("VolumeTable: no validated polynomial for (g=" + std::to_string(g) +
                         ", m=" + std::to_string(m) + ")");
    return it->second;
}

std::vector<const VolumePolynomial*> VolumeTable::all() const {
    std::vector<const VolumePolynomial*> out;
    for (const auto& [key, p] : entries_) out.push_back(&p);
    return out;
}

} // namespace expvol
