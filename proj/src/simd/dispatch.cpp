// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include "expvol/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace expvol::simd {

namespace {

Isa env_or_detected() {
    Isa hw = detect_isa();
    if (const char* e = std::getenv("EXPVOL_ISA")) {
        if (std::strcmp(e, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(e, "avx2") == 0 && hw == Isa::avx2) return Isa::avx2;
    }
    return hw;
}

std::atomic<Isa> g_isa{env_or_detected()};

} // namespace

Isa detect_isa() {
#if defined(EXPVOL_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return Isa::avx2;
#endif
    return Isa::scalar;
}

Isa active_isa() { return g_isa.load(std::memory_order_relaxed); }

Isa set_isa(Isa isa) {
    if (isa == Isa::avx2 && detect_isa() != Isa::avx2) isa = Isa::scalar;
    g_isa.store(isa, std::memory_order_relaxed);
    return isa;
}

const char* isa_name(Isa isa) {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

void vexp(const double* x, double* out, std::size_t n) {
#if defined(EXPVOL_HAVE_AVX2)
    if (active_isa() == Isa::avx2) { detail::vexp_avx2(x, out, n); return; }
#endif
    detail::vexp_scalar(x, out, n);
}

void exp_cosh_pow(const double* u, double* out, std::size_t n,
                  double a, double b, double s, double alpha, int kpow) {
#if defined(EXPVOL_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        detail::exp_cosh_pow_avx2(u, out, n, a, b, s, alpha, kpow);
        return;
    }
#endif
    detail::exp_cosh_pow_scalar(u, out, n, a, b, s, alpha, kpow);
}

void add_scaled_cosh(const double* u, double* acc, std::size_t n,
                     double a, double b) {
#if defined(EXPVOL_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        detail::add_scaled_cosh_avx2(u, acc, n, a, b);
        return;
    }
#endif
    detail::add_scaled_cosh_scalar(u, acc, n, a, b);
}

std::size_t count_inside_halfspaces(const double* const* coords, std::size_t n,
                                    std::size_t dim, const double* A,
                                    const double* b, std::size_t nrows) {
#if defined(EXPVOL_HAVE_AVX2)
    if (active_isa() == Isa::avx2 && dim <= 16)
        return detail::count_inside_halfspaces_avx2(coords, n, dim, A, b, nrows);
#endif
    return detail::count_inside_halfspaces_scalar(coords, n, dim, A, b, nrows);
}

} // namespace expvol::simd
