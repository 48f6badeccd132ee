#include "orr/riemann_roch.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orr {

namespace {

template <typename Key>
std::vector<std::pair<Key, std::int64_t>> merge_runs(std::vector<std::pair<Key, std::int64_t>> entries) {
    for (const auto& [key, count] : entries)
        if (count < 1) throw std::invalid_argument("multiplicity must be at least 1");
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Key, std::int64_t>> merged;
    for (auto& entry : entries) {
        if (!merged.empty() && merged.back().first == entry.first)
            merged.back().second += entry.second;
        else
            merged.push_back(std::move(entry));
    }
    return merged;
}

}  // namespace

BasketPoint::BasketPoint(std::int64_t b, std::int64_t r) : b_(b), r_(r) {
    if (r < 2) throw std::invalid_argument("basket index must be >= 2, got " + std::to_string(r));
    if (b <= 0 || 2 * b > r)
        throw std::invalid_argument("basket point (" + std::to_string(b) + "," + std::to_string(r) +
                                    ") violates 0 < 2b <= r");
    if (std::gcd(b, r) != 1)
        throw std::invalid_argument("basket point (" + std::to_string(b) + "," + std::to_string(r) +
                                    ") is not coprime");
}

BasketPoint BasketPoint::normalized(std::int64_t b, std::int64_t r) {
    if (r < 2) throw std::invalid_argument("basket index must be >= 2, got " + std::to_string(r));
    std::int64_t folded = ((b % r) + r) % r;
    if (2 * folded > r) folded = r - folded;
    return {folded, r};
}

std::vector<std::int64_t> admissible_b_values(std::int64_t r) {
    std::vector<std::int64_t> values;
    for (std::int64_t b = 1; 2 * b <= r; ++b)
        if (std::gcd(b, r) == 1) values.push_back(b);
    return values;
}

Basket::Basket(std::vector<Entry> entries) : entries_(merge_runs(std::move(entries))) {}

Basket Basket::from_points(const std::vector<BasketPoint>& points) {
    std::vector<Entry> entries;
    entries.reserve(points.size());
    for (const auto& p : points) entries.emplace_back(p, 1);
    return Basket(std::move(entries));
}

std::int64_t Basket::size() const {
    std::int64_t total = 0;
    for (const auto& [point, count] : entries_) total += count;
    return total;
}

std::vector<BasketPoint> Basket::expanded() const {
    std::vector<BasketPoint> points;
    for (const auto& [point, count] : entries_) points.insert(points.end(), count, point);
    return points;
}

std::strong_ordering operator<=>(const Basket& lhs, const Basket& rhs) {
    auto a = lhs.expanded();
    auto b = rhs.expanded();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

IndexMultiset::IndexMultiset(std::vector<Entry> entries) : entries_(merge_runs(std::move(entries))) {
    for (const auto& [r, count] : entries_)
        if (r < 2) throw std::invalid_argument("local index must be >= 2, got " + std::to_string(r));
}

IndexMultiset IndexMultiset::from_indices(const std::vector<std::int64_t>& indices) {
    std::vector<Entry> entries;
    entries.reserve(indices.size());
    for (auto r : indices) entries.emplace_back(r, 1);
    return IndexMultiset(std::move(entries));
}

IndexMultiset IndexMultiset::of(const Basket& basket) {
    std::vector<Entry> entries;
    for (const auto& [point, count] : basket.entries()) entries.emplace_back(point.r(), count);
    return IndexMultiset(std::move(entries));
}

std::int64_t IndexMultiset::size() const {
    std::int64_t total = 0;
    for (const auto& [r, count] : entries_) total += count;
    return total;
}

std::vector<std::int64_t> IndexMultiset::expanded() const {
    std::vector<std::int64_t> indices;
    for (const auto& [r, count] : entries_) indices.insert(indices.end(), count, r);
    return indices;
}

Rational IndexMultiset::weight() const {
    Rational total;
    for (const auto& [r, count] : entries_) total += index_weight(r) * Rational(count);
    return total;
}

std::strong_ordering operator<=>(const IndexMultiset& lhs, const IndexMultiset& rhs) {
    auto a = lhs.expanded();
    auto b = rhs.expanded();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Rational index_weight(std::int64_t r) { return Rational(r * r - 1, r); }

std::int64_t residue(std::int64_t j, std::int64_t b, std::int64_t r) { return ((j % r) * (b % r)) % r; }

Rational point_correction(const BasketPoint& point, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("l(m) needs m >= 1");
    const std::int64_t r = point.r();
    Integer numerator = 0;
    for (std::int64_t j = 1; j < m; ++j) {
        const std::int64_t jb = residue(j, point.b(), r);
        numerator += static_cast<long>(jb * (r - jb));
    }
    return Rational(numerator, Integer(static_cast<long>(2 * r)));
}

Rational l_value(const Basket& basket, std::int64_t m) {
    Rational total;
    for (const auto& [point, count] : basket.entries()) total += point_correction(point, m) * Rational(count);
    return total;
}

Rational chi_minus_nK(const Basket& basket, const ChernContext& ctx, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("chi(-nK) needs n >= 0");
    const Rational poly = Rational(n) * Rational(n + 1) * Rational(2 * n + 1) / Rational(12);
    return poly * ctx.anticanonical_cube + Rational(2 * n + 1) * Rational(ctx.chi0) - l_value(basket, n + 1);
}

Rational c1c2_from_indices(const IndexMultiset& indices, std::int64_t chi0) {
    return Rational(24) * Rational(chi0) - indices.weight();
}

std::int64_t cartier_index(const IndexMultiset& indices) {
    std::int64_t acc = 1;
    for (const auto& [r, count] : indices.entries()) {
        const std::int64_t step = r / std::gcd(acc, r);
        if (acc > std::numeric_limits<std::int64_t>::max() / step)
            throw std::overflow_error("Cartier index exceeds 64 bits");
        acc *= step;
    }
    return acc;
}

}  // namespace orr
