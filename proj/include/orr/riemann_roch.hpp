// Baskets of virtual orbifold points and Reid's Riemann-Roch bookkeeping for
// terminal projective 3-folds.
//
// A basket point (b, r) stands for a cyclic quotient point of type
// 1/r(1, -1, b) with gcd(b, r) = 1 and 0 < 2b <= r. Multisets are stored
// run-length encoded as (value, multiplicity) pairs in canonical order.

#pragma once

#include "orr/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace orr {

class BasketPoint {
public:
    /// Throws std::invalid_argument unless r >= 2, gcd(b, r) = 1 and 0 < 2b <= r.
    BasketPoint(std::int64_t b, std::int64_t r);

    /// Accepts any b coprime to r and folds it into (0, r/2] via b -> r - b.
    static BasketPoint normalized(std::int64_t b, std::int64_t r);

    [[nodiscard]] std::int64_t b() const { return b_; }
    [[nodiscard]] std::int64_t r() const { return r_; }

    /// Canonical order: by r, then by b.
    friend auto operator<=>(const BasketPoint& lhs, const BasketPoint& rhs) {
        if (auto c = lhs.r_ <=> rhs.r_; c != 0) return c;
        return lhs.b_ <=> rhs.b_;
    }
    friend bool operator==(const BasketPoint&, const BasketPoint&) = default;

private:
    std::int64_t b_;
    std::int64_t r_;
};

/// Admissible b-values for index r: 0 < 2b <= r with gcd(b, r) = 1, ascending.
std::vector<std::int64_t> admissible_b_values(std::int64_t r);

class Basket {
public:
    using Entry = std::pair<BasketPoint, std::int64_t>;

    Basket() = default;
    /// Entries in any order; equal points are merged. Throws on multiplicity < 1.
    explicit Basket(std::vector<Entry> entries);
    Basket(std::initializer_list<Entry> entries) : Basket(std::vector<Entry>(entries)) {}

    /// One entry per listed point, merged and sorted.
    static Basket from_points(const std::vector<BasketPoint>& points);

    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
    [[nodiscard]] bool empty() const { return entries_.empty(); }
    /// Number of points counted with multiplicity.
    [[nodiscard]] std::int64_t size() const;
    /// Points expanded by multiplicity, canonical order.
    [[nodiscard]] std::vector<BasketPoint> expanded() const;

    friend bool operator==(const Basket&, const Basket&) = default;
    /// Lexicographic on the expanded canonical point sequence.
    friend std::strong_ordering operator<=>(const Basket& lhs, const Basket& rhs);

private:
    std::vector<Entry> entries_;
};

class IndexMultiset {
public:
    using Entry = std::pair<std::int64_t, std::int64_t>;  // (r, multiplicity)

    IndexMultiset() = default;
    /// Entries in any order; equal indices are merged. Throws on r < 2 or multiplicity < 1.
    explicit IndexMultiset(std::vector<Entry> entries);
    IndexMultiset(std::initializer_list<Entry> entries) : IndexMultiset(std::vector<Entry>(entries)) {}

    static IndexMultiset from_indices(const std::vector<std::int64_t>& indices);
    /// Forgets the b-values of a basket.
    static IndexMultiset of(const Basket& basket);

    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
    [[nodiscard]] bool empty() const { return entries_.empty(); }
    [[nodiscard]] std::int64_t size() const;
    /// Indices expanded by multiplicity, ascending.
    [[nodiscard]] std::vector<std::int64_t> expanded() const;

    /// Sum over points of (r - 1/r).
    [[nodiscard]] Rational weight() const;

    friend bool operator==(const IndexMultiset&, const IndexMultiset&) = default;
    /// Lexicographic on the expanded ascending index sequence.
    friend std::strong_ordering operator<=>(const IndexMultiset& lhs, const IndexMultiset& rhs);

private:
    std::vector<Entry> entries_;
};

/// r - 1/r, the contribution of one index-r point to the Euler identity.
Rational index_weight(std::int64_t r);

struct ChernContext {
    std::int64_t chi0 = 1;           // chi(O_X)
    Rational anticanonical_cube{0};  // (-K_X)^3
};

/// Smallest non-negative residue of j*b mod r.
std::int64_t residue(std::int64_t j, std::int64_t b, std::int64_t r);

/// Sum_{j=1}^{m-1} jb(r - jb) / 2r with jb the residue of j*b mod r. Zero for m = 1.
Rational point_correction(const BasketPoint& point, std::int64_t m);

/// l(m): point_correction summed over the basket with multiplicities; l(1) = 0.
Rational l_value(const Basket& basket, std::int64_t m);

/// chi(-nK_X) = n(n+1)(2n+1)/12 * (-K^3) + (2n+1) chi0 - l(n+1), for n >= 0.
Rational chi_minus_nK(const Basket& basket, const ChernContext& ctx, std::int64_t n);

/// c1.c2 = 24 chi0 - sum (r - 1/r).
Rational c1c2_from_indices(const IndexMultiset& indices, std::int64_t chi0);

/// lcm of the indices; 1 for the empty multiset. Throws std::overflow_error past int64.
std::int64_t cartier_index(const IndexMultiset& indices);

}  // namespace orr
