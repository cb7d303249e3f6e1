// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include "expvol/detail/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "expvol/errors.hpp"

namespace expvol::detail {

namespace {

std::int64_t checked_cast(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw eval_error("rational overflow in exact tropical integration");
    return static_cast<std::int64_t>(v);
}

Rat make(__int128 n, __int128 d) {
    if (d == 0) throw eval_error("rational division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    Rat r;
    r.n = checked_cast(n);
    r.d = checked_cast(d);
    return r;
}

} // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
    *this = make(num, den);
}

bool Rat::operator<(const Rat& o) const {
    return static_cast<__int128>(n) * o.d < static_cast<__int128>(o.n) * d;
}

Rat operator+(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.n) * b.d + static_cast<__int128>(b.n) * a.d,
                static_cast<__int128>(a.d) * b.d);
}
Rat operator-(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.n) * b.d - static_cast<__int128>(b.n) * a.d,
                static_cast<__int128>(a.d) * b.d);
}
Rat operator*(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.n) * b.n, static_cast<__int128>(a.d) * b.d);
}
Rat operator/(const Rat& a, const Rat& b) {
    if (b.n == 0) throw eval_error("rational division by zero");
    return make(static_cast<__int128>(a.n) * b.d, static_cast<__int128>(a.d) * b.n);
}
Rat operator-(const Rat& a) { return Rat(-a.n, a.d); }

std::optional<Rat> rat_from_double(double x, std::int64_t max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    // continued-fraction convergents
    double v = x;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        const double fa = std::floor(v);
        if (std::fabs(fa) > 1e15) return std::nullopt;
        const auto a = static_cast<std::int64_t>(fa);
        const std::int64_t p2 = a * p1 + p0;
        const std::int64_t q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::fabs(approx - x) <= 1e-12 * std::max(1.0, std::fabs(x)))
            return Rat(p1, q1);
        const double frac = v - fa;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    return std::nullopt;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.resize(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    return r;
}

Poly scale(const Poly& a, const Rat& s) {
    Poly r = a;
    for (auto& ci : r.c) ci = ci * s;
    return r;
}

Poly compose_linear(const Poly& p, const Rat& a, const Rat& b) {
    // Horner in (a + b x)
    Poly lin;
    lin.c = {a, b};
    Poly acc;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = acc * lin;
        acc = acc + Poly::constant(*it);
    }
    return acc;
}

Poly antiderivative(const Poly& p) {
    Poly r;
    r.c.resize(p.c.size() + 1, Rat(0));
    for (std::size_t i = 0; i < p.c.size(); ++i)
        r.c[i + 1] = p.c[i] / Rat(static_cast<std::int64_t>(i + 1));
    return r;
}

Piecewise Piecewise::indicator(const Rat& a, const Rat& b) {
    Piecewise p;
    p.breaks = {a, b};
    p.pieces = {Poly::constant(Rat(1))};
    return p;
}

Rat Piecewise::eval(const Rat& x) const {
    if (breaks.empty() || x < breaks.front() || breaks.back() < x) return Rat(0);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        if (!(breaks[i + 1] < x)) return pieces[i].eval(x);
    return Rat(0);
}

double Piecewise::eval(double x) const {
    if (breaks.empty()) return 0.0;
    if (x < breaks.front().to_double() || x > breaks.back().to_double()) return 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        if (x <= breaks[i + 1].to_double()) return pieces[i].eval(x);
    return 0.0;
}

Rat Piecewise::integral() const {
    Rat total(0);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Poly F = expvol::detail::antiderivative(pieces[i]);
        total = total + (F.eval(breaks[i + 1]) - F.eval(breaks[i]));
    }
    return total;
}

Piecewise Piecewise::antiderivative_fn() const {
    Piecewise F;
    F.breaks = breaks;
    Rat acc(0);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        Poly Fi = expvol::detail::antiderivative(pieces[i]);
        const Rat at_left = Fi.eval(breaks[i]);
        // piece value acc + Fi(x) - Fi(left)
        Poly piece = Fi + Poly::constant(acc - at_left);
        F.pieces.push_back(piece);
        acc = acc + Fi.eval(breaks[i + 1]) - at_left;
    }
    return F;
}

Piecewise Piecewise::shifted(const Rat& shift) const {
    // x -> f(x + shift): support moves by -shift
    Piecewise r;
    for (const auto& b : breaks) r.breaks.push_back(b - shift);
    for (const auto& p : pieces) r.pieces.push_back(compose_linear(p, shift, Rat(1)));
    return r;
}

Piecewise multiply(const Piecewise& a, const Piecewise& b) {
    Piecewise r;
    if (a.breaks.empty() || b.breaks.empty()) return r;
    const Rat lo = std::max(a.breaks.front(), b.breaks.front());
    const Rat hi = std::min(a.breaks.back(), b.breaks.back());
    if (!(lo < hi)) return r;
    std::vector<Rat> cuts;
    for (const auto& x : a.breaks)
        if (!(x < lo) && !(hi < x)) cuts.push_back(x);
    for (const auto& x : b.breaks)
        if (!(x < lo) && !(hi < x)) cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    r.breaks = cuts;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rat mid = (cuts[i] + cuts[i + 1]) / Rat(2);
        Poly pa, pb;
        for (std::size_t j = 0; j + 1 < a.breaks.size(); ++j)
            if (!(mid < a.breaks[j]) && mid < a.breaks[j + 1]) pa = a.pieces[j];
        for (std::size_t j = 0; j + 1 < b.breaks.size(); ++j)
            if (!(mid < b.breaks[j]) && mid < b.breaks[j + 1]) pb = b.pieces[j];
        r.pieces.push_back(pa * pb);
    }
    return r;
}

Piecewise convolve_indicator(const Piecewise& f, const Rat& a) {
    // (f * 1_{[a,0]})(s) = int_{s}^{s-a} f = F(s-a) - F(s), a < 0.
    const Piecewise F = f.antiderivative_fn();
    const Rat total = f.integral();

    // Build on the union support [lo + a, hi] with all shifted breakpoints.
    std::vector<Rat> cuts;
    for (const auto& b : F.breaks) {
        cuts.push_back(b);
        cuts.push_back(b + a);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto eval_sym = [&](const Rat& shift, const Rat& s_lo, const Rat& s_hi) -> Poly {
        // F(x + shift) as a polynomial valid on (s_lo, s_hi): constant before
        // the support, the matching piece inside, constant `total` after.
        const Rat mid = (s_lo + s_hi) / Rat(2);
        const Rat probe = mid + shift;
        if (probe < F.breaks.front()) return Poly::constant(Rat(0));
        if (F.breaks.back() < probe) return Poly::constant(total);
        for (std::size_t j = 0; j + 1 < F.breaks.size(); ++j)
            if (!(probe < F.breaks[j]) && probe < F.breaks[j + 1])
                return compose_linear(F.pieces[j], shift, Rat(1));
        return Poly::constant(total);
    };

    Piecewise r;
    r.breaks = cuts;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Poly hi_part = eval_sym(-a, cuts[i], cuts[i + 1]); // F(s - a)
        const Poly lo_part = eval_sym(Rat(0), cuts[i], cuts[i + 1]); // F(s)
        r.pieces.push_back(hi_part - lo_part);
    }
    return r;
}

} // namespace expvol::detail
