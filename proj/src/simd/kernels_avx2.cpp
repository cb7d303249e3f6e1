// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

// AVX2+FMA variants.  This translation unit is the only one compiled with
// -mavx2 -mfma; it must stay free of calls into generic code that the
// compiler could auto-vectorize with unsupported instructions elsewhere.

#include "expvol/simd/kernels.hpp"

#if defined(EXPVOL_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstdint>

namespace expvol::simd::detail {

namespace {

// exp(x) for 4 lanes.  Range reduction x = n*ln2 + r, |r| <= ln2/2, then a
// degree-13 Taylor polynomial and two-step 2^n scaling so that n outside
// [-1022, 1023] still produces correct denormal/zero results.
inline __m256d exp4(__m256d x) {
    const __m256d log2e   = _mm256_set1_pd(1.4426950408889634074);
    const __m256d ln2_hi  = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d ln2_lo  = _mm256_set1_pd(1.42860682030941723212e-6);
    const __m256d max_x   = _mm256_set1_pd(709.0);
    const __m256d min_x   = _mm256_set1_pd(-745.0);

    x = _mm256_min_pd(x, max_x);
    x = _mm256_max_pd(x, min_x);

    __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
    r = _mm256_fnmadd_pd(n, ln2_lo, r);

    // Horner evaluation of sum_{k<=13} r^k / k!
    __m256d p = _mm256_set1_pd(1.0 / 6227020800.0);           // 1/13!
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 479001600.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

    // 2^n = 2^n1 * 2^n2 with n1 = floor(n/2).
    __m256d n1 = _mm256_floor_pd(_mm256_mul_pd(n, _mm256_set1_pd(0.5)));
    __m256d n2 = _mm256_sub_pd(n, n1);
    __m128i i1 = _mm256_cvtpd_epi32(n1);
    __m128i i2 = _mm256_cvtpd_epi32(n2);
    __m256i e1 = _mm256_cvtepi32_epi64(i1);
    __m256i e2 = _mm256_cvtepi32_epi64(i2);
    const __m256i bias = _mm256_set1_epi64x(1023);
    __m256d s1 = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(e1, bias), 52));
    __m256d s2 = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(e2, bias), 52));

    return _mm256_mul_pd(_mm256_mul_pd(p, s1), s2);
}

} // namespace

void vexp_avx2(const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, exp4(_mm256_loadu_pd(x + i)));
    for (; i < n; ++i) out[i] = std::exp(x[i]);
}

void exp_cosh_pow_avx2(const double* u, double* out, std::size_t n,
                       double a, double b, double s, double alpha, int kpow) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    const __m256d vs = _mm256_set1_pd(s);
    const __m256d valpha = _mm256_set1_pd(alpha);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vu = _mm256_loadu_pd(u + i);
        __m256d eu = exp4(vu);
        __m256d emu = _mm256_div_pd(one, eu);
        __m256d arg = _mm256_mul_pd(vs, vu);
        arg = _mm256_fnmadd_pd(va, eu, arg);
        arg = _mm256_fnmadd_pd(vb, emu, arg);
        __m256d v = exp4(arg);
        if (kpow > 0) {
            __m256d pw = _mm256_fnmadd_pd(two, vu, valpha);
            for (int k = 0; k < kpow; ++k) v = _mm256_mul_pd(v, pw);
        }
        _mm256_storeu_pd(out + i, v);
    }
    if (i < n) exp_cosh_pow_scalar(u + i, out + i, n - i, a, b, s, alpha, kpow);
}

void add_scaled_cosh_avx2(const double* u, double* acc, std::size_t n,
                          double a, double b) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d eu = exp4(_mm256_loadu_pd(u + i));
        __m256d v = _mm256_loadu_pd(acc + i);
        v = _mm256_fmadd_pd(va, eu, v);
        v = _mm256_fmadd_pd(vb, _mm256_div_pd(one, eu), v);
        _mm256_storeu_pd(acc + i, v);
    }
    if (i < n) add_scaled_cosh_scalar(u + i, acc + i, n - i, a, b);
}

std::size_t count_inside_halfspaces_avx2(const double* const* coords, std::size_t n,
                                         std::size_t dim, const double* A,
                                         const double* b, std::size_t nrows) {
    std::size_t count = 0;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d ok = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
        for (std::size_t r = 0; r < nrows; ++r) {
            const double* row = A + r * dim;
            __m256d dot = _mm256_setzero_pd();
            for (std::size_t d = 0; d < dim; ++d)
                dot = _mm256_fmadd_pd(_mm256_set1_pd(row[d]),
                                      _mm256_loadu_pd(coords[d] + j), dot);
            ok = _mm256_and_pd(ok, _mm256_cmp_pd(dot, _mm256_set1_pd(b[r]), _CMP_LE_OQ));
            if (_mm256_movemask_pd(ok) == 0) break;
        }
        count += static_cast<std::size_t>(__builtin_popcount(
            static_cast<unsigned>(_mm256_movemask_pd(ok))));
    }
    if (j < n) {
        const double* tail[16]; // dispatch routes dim > 16 to the scalar kernel
        for (std::size_t d = 0; d < dim; ++d) tail[d] = coords[d] + j;
        count += count_inside_halfspaces_scalar(tail, n - j, dim, A, b, nrows);
    }
    return count;
}

} // namespace expvol::simd::detail

#endif // EXPVOL_HAVE_AVX2
