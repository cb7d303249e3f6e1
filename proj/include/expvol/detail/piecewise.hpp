// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace expvol::detail {

// Exact rational on 64-bit num/den with __int128 intermediates.
struct Rat {
    std::int64_t n = 0;
    std::int64_t d = 1;

    Rat() = default;
    Rat(std::int64_t num) : n(num), d(1) {}
    Rat(std::int64_t num, std::int64_t den);

    double to_double() const { return static_cast<double>(n) / static_cast<double>(d); }
    bool operator==(const Rat& o) const { return n == o.n && d == o.d; }
    bool operator<(const Rat& o) const;
};

Rat operator+(const Rat& a, const Rat& b);
Rat operator-(const Rat& a, const Rat& b);
Rat operator*(const Rat& a, const Rat& b);
Rat operator/(const Rat& a, const Rat& b);
Rat operator-(const Rat& a);

// Best rational approximation with a small denominator; nullopt when x is not
// (numerically) a small rational.
std::optional<Rat> rat_from_double(double x, std::int64_t max_den = 1 << 20);

// Dense polynomial with rational coefficients, coeffs[k] x^k.
struct Poly {
    std::vector<Rat> c;

    static Poly constant(const Rat& v) { return Poly{{v}}; }
    Rat eval(const Rat& x) const;
    double eval(double x) const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rat& s);
// p(a + b x)
Poly compose_linear(const Poly& p, const Rat& a, const Rat& b);
// antiderivative with zero constant term
Poly antiderivative(const Poly& p);

// Piecewise polynomial on [breaks.front(), breaks.back()], zero outside;
// pieces[i] lives on [breaks[i], breaks[i+1]].
struct Piecewise {
    std::vector<Rat> breaks;
    std::vector<Poly> pieces;

    static Piecewise indicator(const Rat& a, const Rat& b); // 1 on [a,b]
    Rat eval(const Rat& x) const;
    double eval(double x) const;
    Rat integral() const;
    // continuous antiderivative F with F(breaks.front()) = 0; constant
    // extension outside the support.
    Piecewise antiderivative_fn() const;
    // x -> f(x + shift)
    Piecewise shifted(const Rat& shift) const;
};

Piecewise multiply(const Piecewise& a, const Piecewise& b);
// convolution with the indicator of [a, 0] (a < 0):
// (f * 1_{[a,0]})(s) = F(s - a) - F(s)
Piecewise convolve_indicator(const Piecewise& f, const Rat& a);

} // namespace expvol::detail
