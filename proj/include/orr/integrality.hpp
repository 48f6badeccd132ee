// Does some basket over a given index multiset make l(2), ..., l(depth) all
// integers at once?
//
// Each admissible b for index r contributes a fixed vector of fractional parts
// (one per m = 2..depth). Those vectors live on the common denominator
// lcm{2r}, so the question is a subset-sum over a finite abelian group. We keep
// the set of reachable fractional-part vectors as a sparse sorted set.

#pragma once

#include "orr/riemann_roch.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace orr {

/// Reachable fractional parts of (l(2), ..., l(depth)) over all baskets whose
/// indices form a given multiset. Starts as the singleton {0} (empty basket).
class ResidueFrontier {
public:
    explicit ResidueFrontier(int depth);

    /// Adds `count` points of index r with any admissible b-values.
    [[nodiscard]] ResidueFrontier extended(std::int64_t r, std::int64_t count = 1) const;

    /// True iff some basket reaches l(m) in Z for all m in 2..depth.
    [[nodiscard]] bool contains_zero() const;
    /// Membership of a residue vector taken modulo `modulus`.
    [[nodiscard]] bool contains(const std::vector<std::int64_t>& residues, std::int64_t modulus) const;

    [[nodiscard]] int depth() const { return width_ + 1; }
    [[nodiscard]] std::int64_t modulus() const { return modulus_; }
    [[nodiscard]] std::size_t size() const { return width_ == 0 ? 0 : flat_.size() / width_; }

private:
    void rescale(std::int64_t new_modulus);
    void normalize();

    int width_;
    std::int64_t modulus_ = 1;
    std::vector<std::int64_t> flat_;  // rows of width_, sorted and unique
};

/// Numerators of (l(2), ..., l(depth)) for one point over the denominator 2r,
/// reduced mod 2r.
std::vector<std::int64_t> point_residues(const BasketPoint& point, int depth);

struct IntegralBasketResult {
    bool exists = false;
    std::optional<Basket> witness;  // lexicographically smallest when exists
};

/// Decides existence and returns the lexicographically smallest witness
/// (comparing expanded canonical point sequences). Throws on depth < 2.
IntegralBasketResult exists_integral_basket(const IndexMultiset& indices, int depth = 2);

}  // namespace orr
