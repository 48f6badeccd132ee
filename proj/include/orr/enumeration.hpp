// Exhaustive enumeration of index multisets R with sum_{r in R} (r - 1/r) <= 24 chi,
// i.e. every singularity content compatible with c1.c2 >= 0.

#pragma once

#include "orr/integrality.hpp"
#include "orr/rational.hpp"
#include "orr/riemann_roch.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace orr {

struct Filter {
    enum class Kind { All, C1c2Zero, IntegralL2, C1c2InRange };

    Kind kind = Kind::All;
    Rational lo;  // inclusive bounds, C1c2InRange only
    Rational hi;

    static Filter all() { return {}; }
    static Filter c1c2_zero() { return {Kind::C1c2Zero, {}, {}}; }
    static Filter integral_l2() { return {Kind::IntegralL2, {}, {}}; }
    static Filter c1c2_in_range(Rational lo, Rational hi) { return {Kind::C1c2InRange, std::move(lo), std::move(hi)}; }
};

struct EnumerationQuery {
    std::int64_t chi0 = 1;
    bool include_empty = false;
    Filter filter;
    /// l(m) must be integral for every 2 <= m <= depth, by one common basket.
    int integrality_depth = 2;
    /// Permits chi0 outside {0, 1, 2}.
    bool allow_any_chi = false;
    /// Overrides the weight budget 24 * chi0 (exploration and oracle checks).
    std::optional<Rational> weight_budget;
    /// Worker threads; output does not depend on it.
    unsigned jobs = 1;

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
    [[nodiscard]] Rational budget() const;
};

struct ChernRecord {
    IndexMultiset indices;
    std::int64_t chi0 = 0;
    Rational c1c2;
    std::int64_t cartier_index = 1;
    bool has_integral_basket = false;
    std::optional<Basket> witness;

    /// Computes every column from scratch. Throws std::logic_error if c1c2 < 0
    /// or the witness fails to re-verify.
    static ChernRecord make(IndexMultiset indices, std::int64_t chi0, int depth = 2);

    friend bool operator==(const ChernRecord&, const ChernRecord&) = default;
};

/// Canonical total order: weight ascending, then the sorted index sequence.
bool canonical_less(const ChernRecord& lhs, const ChernRecord& rhs);

std::vector<ChernRecord> enumerate_index_multisets(const EnumerationQuery& query);

/// Number of non-empty records passing the filter.
std::size_t count_candidates(std::int64_t chi0, const Filter& filter, int depth = 2, unsigned jobs = 1);

struct MinimumResult {
    Rational value;
    std::vector<IndexMultiset> attained_by;  // canonical order, every tie
};

/// Smallest positive c1.c2 over the enumerated records (optionally only those
/// with an l(2)-integral basket). Empty when no record has c1.c2 > 0.
std::optional<MinimumResult> min_positive_c1c2(std::int64_t chi0, bool require_integral, unsigned jobs = 1);

/// max_cube / min_positive; the constant b in c1^3 <= b * c1.c2.
/// Throws std::domain_error unless min_positive > 0.
Rational effective_bound(const Rational& max_cube, const Rational& min_positive);

/// Prime factorization as ascending (prime, exponent) pairs; n >= 1.
std::vector<std::pair<std::int64_t, int>> prime_factorization(std::int64_t n);

}  // namespace orr
