// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <cmath>
#include <cstdint>

namespace expvol::detail {

// Counter-based generator: every (seed, index, slot) triple maps to one
// uniform, so Monte-Carlo estimates are reproducible regardless of call
// order or batching.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline double uniform01(std::uint64_t seed, std::uint64_t index, std::uint64_t slot) {
    const std::uint64_t bits = splitmix64(seed ^ splitmix64(index * 0x632be59bd9b4e019ULL + slot));
    // 53-bit mantissa in (0, 1)
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

inline double normal01(std::uint64_t seed, std::uint64_t index, std::uint64_t slot) {
    const double u1 = uniform01(seed, index, 2 * slot);
    const double u2 = uniform01(seed, index, 2 * slot + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

} // namespace expvol::detail
