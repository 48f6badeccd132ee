// Random generators for property tests.

#pragma once

#include "orr/riemann_roch.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace test_support {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

/// Up to `max_points` indices drawn from [2, max_r].
inline orr::IndexMultiset random_indices(std::mt19937_64& g, int max_points, std::int64_t max_r) {
    std::vector<std::int64_t> out(uniform(g, 0, max_points));
    for (auto& r : out) r = uniform(g, 2, max_r);
    return orr::IndexMultiset::from_indices(out);
}

/// Up to `max_points` admissible points with index in [2, max_r].
inline orr::Basket random_basket(std::mt19937_64& g, int max_points, std::int64_t max_r) {
    std::vector<orr::BasketPoint> points;
    const auto n = uniform(g, 0, max_points);
    for (std::int64_t i = 0; i < n; ++i) {
        const auto r = uniform(g, 2, max_r);
        const auto bs = orr::admissible_b_values(r);
        points.emplace_back(bs[uniform(g, 0, static_cast<std::int64_t>(bs.size()) - 1)], r);
    }
    return orr::Basket::from_points(points);
}

}  // namespace test_support
