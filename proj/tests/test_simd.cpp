// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "expvol/simd/kernels.hpp"

using namespace expvol;

namespace {

std::vector<double> random_values(std::size_t n, double lo, double hi, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

} // namespace

TEST_CASE("scalar vexp matches std::exp") {
    auto xs = random_values(1001, -700.0, 700.0, 1);
    xs.push_back(0.0);
    xs.push_back(-745.0);
    xs.push_back(709.0);
    std::vector<double> out(xs.size());
    simd::detail::vexp_scalar(xs.data(), out.data(), xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(out[i] == std::exp(xs[i]));
}

#if defined(EXPVOL_HAVE_AVX2)

TEST_CASE("avx2 kernels agree with scalar reference") {
    if (simd::detect_isa() != simd::Isa::avx2) {
        MESSAGE("hardware lacks AVX2; equivalence suite skipped");
        return;
    }
    SUBCASE("vexp") {
        auto xs = random_values(1003, -700.0, 700.0, 2);
        xs.push_back(0.0);
        xs.push_back(-1e-300);
        xs.push_back(709.0);
        xs.push_back(-745.0);
        std::vector<double> a(xs.size()), b(xs.size());
        simd::detail::vexp_scalar(xs.data(), a.data(), xs.size());
        simd::detail::vexp_avx2(xs.data(), b.data(), xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (a[i] == 0.0)
                CHECK(std::fabs(b[i]) <= 1e-300);
            else
                CHECK(std::fabs(a[i] - b[i]) <= 2e-13 * std::fabs(a[i]));
        }
    }
    SUBCASE("exp_cosh_pow") {
        auto us = random_values(517, -12.0, 12.0, 3);
        for (int k : {0, 1, 3}) {
            std::vector<double> a(us.size()), b(us.size());
            simd::detail::exp_cosh_pow_scalar(us.data(), a.data(), us.size(), 1.3, 0.4, 0.7,
                                              2.5, k);
            simd::detail::exp_cosh_pow_avx2(us.data(), b.data(), us.size(), 1.3, 0.4, 0.7,
                                            2.5, k);
            for (std::size_t i = 0; i < us.size(); ++i)
                CHECK(std::fabs(a[i] - b[i]) <=
                      1e-12 * std::max(std::fabs(a[i]), 1e-300));
        }
    }
    SUBCASE("add_scaled_cosh") {
        auto us = random_values(519, -8.0, 8.0, 4);
        std::vector<double> a(us.size(), 0.5), b(us.size(), 0.5);
        simd::detail::add_scaled_cosh_scalar(us.data(), a.data(), us.size(), 0.9, 2.1);
        simd::detail::add_scaled_cosh_avx2(us.data(), b.data(), us.size(), 0.9, 2.1);
        for (std::size_t i = 0; i < us.size(); ++i)
            CHECK(std::fabs(a[i] - b[i]) <= 1e-12 * std::fabs(a[i]));
    }
    SUBCASE("count_inside_halfspaces") {
        const std::size_t n = 2001;
        auto x = random_values(n, -2.0, 2.0, 7);
        auto y = random_values(n, -2.0, 2.0, 8);
        auto z = random_values(n, -2.0, 2.0, 9);
        const double* coords[3] = {x.data(), y.data(), z.data()};
        // simplex x,y,z >= -1, x+y+z <= 1
        const double A[12] = {-1, 0, 0, 0, -1, 0, 0, 0, -1, 1, 1, 1};
        const double b[4] = {1, 1, 1, 1};
        const auto cs = simd::detail::count_inside_halfspaces_scalar(coords, n, 3, A, b, 4);
        const auto cv = simd::detail::count_inside_halfspaces_avx2(coords, n, 3, A, b, 4);
        CHECK(cs == cv);
        CHECK(cs > 0);
    }
}

#endif // EXPVOL_HAVE_AVX2

TEST_CASE("isa dispatch override") {
    const simd::Isa hw = simd::detect_isa();
    CHECK(simd::set_isa(simd::Isa::scalar) == simd::Isa::scalar);
    double x = 1.5, y = 0.0;
    simd::vexp(&x, &y, 1);
    CHECK(y == doctest::Approx(std::exp(1.5)).epsilon(1e-14));
    CHECK(simd::set_isa(hw) == hw);
    simd::vexp(&x, &y, 1);
    CHECK(std::fabs(y - std::exp(1.5)) <= 1e-13 * std::exp(1.5));
}
