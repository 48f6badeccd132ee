#include "orr/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

namespace orr {

void EnumerationQuery::validate() const {
    if (chi0 < 0) throw std::invalid_argument("chi must be non-negative, got " + std::to_string(chi0));
    if (!allow_any_chi && chi0 > 2)
        throw std::invalid_argument("chi must be 0, 1 or 2 (got " + std::to_string(chi0) + "); pass the unsafe-chi override to explore");
    if (integrality_depth < 2) throw std::invalid_argument("integrality depth must be >= 2");
    if (filter.kind == Filter::Kind::C1c2InRange && filter.hi < filter.lo)
        throw std::invalid_argument("empty c1c2 range: " + filter.lo.to_string() + " > " + filter.hi.to_string());
    if (jobs == 0) throw std::invalid_argument("jobs must be >= 1");
    if (weight_budget && weight_budget->sign() < 0) throw std::invalid_argument("weight budget must be >= 0");
}

Rational EnumerationQuery::budget() const { return weight_budget ? *weight_budget : Rational(24 * chi0); }

ChernRecord ChernRecord::make(IndexMultiset indices, std::int64_t chi0, int depth) {
    ChernRecord rec;
    rec.c1c2 = c1c2_from_indices(indices, chi0);
    if (rec.c1c2.sign() < 0) throw std::logic_error("record with negative c1c2");
    rec.chi0 = chi0;
    rec.cartier_index = orr::cartier_index(indices);
    auto integral = exists_integral_basket(indices, depth);
    rec.has_integral_basket = integral.exists;
    rec.witness = std::move(integral.witness);
    if (rec.witness) {
        if (!(IndexMultiset::of(*rec.witness) == indices)) throw std::logic_error("witness does not project to R");
        for (int m = 2; m <= depth; ++m)
            if (!l_value(*rec.witness, m).is_integer()) throw std::logic_error("witness fails integrality");
    }
    rec.indices = std::move(indices);
    return rec;
}

bool canonical_less(const ChernRecord& lhs, const ChernRecord& rhs) {
    if (lhs.chi0 == rhs.chi0) {
        // weight = 24 chi0 - c1c2
        if (lhs.c1c2 != rhs.c1c2) return rhs.c1c2 < lhs.c1c2;
        return lhs.indices < rhs.indices;
    }
    const Rational wl = lhs.indices.weight();
    const Rational wr = rhs.indices.weight();
    if (wl != wr) return wl < wr;
    return lhs.indices < rhs.indices;
}

namespace {

bool passes(const Filter& filter, const ChernRecord& rec) {
    switch (filter.kind) {
        case Filter::Kind::All:
            return true;
        case Filter::Kind::C1c2Zero:
            return rec.c1c2.sign() == 0;
        case Filter::Kind::IntegralL2:
            return rec.has_integral_basket;
        case Filter::Kind::C1c2InRange:
            return filter.lo <= rec.c1c2 && rec.c1c2 <= filter.hi;
    }
    return false;
}

// Depth-first search over run-length prefixes with strictly increasing
// distinct indices. `frontier` tracks reachable fractional parts of
// l(2..depth) so integrality is known at each node without re-solving.
class Searcher {
public:
    Searcher(const EnumerationQuery& query, std::vector<ChernRecord>& out) : query_(query), out_(out) {}

    void run(std::int64_t r, std::int64_t k, const Rational& budget, const ResidueFrontier& base) {
        prefix_.assign(1, {r, k});
        visit(base.extended(r, k), budget - weight(r) * Rational(k), r + 1);
    }

    Rational weight(std::int64_t r) {
        while (static_cast<std::int64_t>(weights_.size()) <= r)
            weights_.push_back(index_weight(std::max<std::int64_t>(2, static_cast<std::int64_t>(weights_.size()))));
        return weights_[r];
    }

private:
    void visit(const ResidueFrontier& frontier, const Rational& budget, std::int64_t next_r) {
        emit(frontier);
        for (std::int64_t r = next_r;; ++r) {
            const Rational w = weight(r);
            if (w > budget) break;
            Rational remaining = budget - w;
            ResidueFrontier grown = frontier.extended(r);
            for (std::int64_t k = 1;; ++k) {
                prefix_.emplace_back(r, k);
                visit(grown, remaining, r + 1);
                prefix_.pop_back();
                if (w > remaining) break;
                remaining -= w;
                grown = grown.extended(r);
            }
        }
    }

    void emit(const ResidueFrontier& frontier) {
        IndexMultiset indices(prefix_);
        ChernRecord rec;
        rec.chi0 = query_.chi0;
        rec.c1c2 = c1c2_from_indices(indices, query_.chi0);
        rec.has_integral_basket = frontier.contains_zero();
        if (!passes(query_.filter, rec)) return;
        if (rec.has_integral_basket) {
            // Witness search only where one exists.
            rec = ChernRecord::make(std::move(indices), query_.chi0, query_.integrality_depth);
            if (!rec.has_integral_basket) throw std::logic_error("frontier and witness search disagree");
        } else {
            if (rec.c1c2.sign() < 0) throw std::logic_error("record with negative c1c2");
            rec.cartier_index = orr::cartier_index(indices);
            rec.indices = std::move(indices);
        }
        out_.push_back(std::move(rec));
    }

    const EnumerationQuery& query_;
    std::vector<ChernRecord>& out_;
    std::vector<IndexMultiset::Entry> prefix_;
    std::vector<Rational> weights_;
};

}  // namespace

std::vector<ChernRecord> enumerate_index_multisets(const EnumerationQuery& query) {
    query.validate();
    const Rational budget = query.budget();
    const ResidueFrontier root(query.integrality_depth);

    // Top-level branches: smallest index r and its multiplicity k.
    struct Branch {
        std::int64_t r;
        std::int64_t k;
    };
    std::vector<Branch> branches;
    for (std::int64_t r = 2; index_weight(r) <= budget; ++r)
        for (std::int64_t k = 1; index_weight(r) * Rational(k) <= budget; ++k) branches.push_back({r, k});

    std::vector<std::vector<ChernRecord>> results(branches.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < branches.size(); i = next++) {
            Searcher searcher(query, results[i]);
            searcher.run(branches[i].r, branches[i].k, budget, root);
        }
    };
    const unsigned threads = std::min<unsigned>(query.jobs, std::max<std::size_t>(branches.size(), 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    std::vector<ChernRecord> records;
    if (query.include_empty) {
        auto empty = ChernRecord::make({}, query.chi0, query.integrality_depth);
        if (passes(query.filter, empty)) records.push_back(std::move(empty));
    }
    for (auto& part : results) std::move(part.begin(), part.end(), std::back_inserter(records));
    std::sort(records.begin(), records.end(), canonical_less);
    return records;
}

std::size_t count_candidates(std::int64_t chi0, const Filter& filter, int depth, unsigned jobs) {
    EnumerationQuery query;
    query.chi0 = chi0;
    query.filter = filter;
    query.integrality_depth = depth;
    query.jobs = jobs;
    return enumerate_index_multisets(query).size();
}

std::optional<MinimumResult> min_positive_c1c2(std::int64_t chi0, bool require_integral, unsigned jobs) {
    EnumerationQuery query;
    query.chi0 = chi0;
    query.filter = require_integral ? Filter::integral_l2() : Filter::all();
    query.jobs = jobs;
    std::optional<MinimumResult> best;
    for (auto& rec : enumerate_index_multisets(query)) {
        if (rec.c1c2.sign() <= 0) continue;
        if (!best || rec.c1c2 < best->value) {
            best = MinimumResult{rec.c1c2, {}};
        }
        if (rec.c1c2 == best->value) best->attained_by.push_back(rec.indices);
    }
    if (best) std::sort(best->attained_by.begin(), best->attained_by.end());
    return best;
}

Rational effective_bound(const Rational& max_cube, const Rational& min_positive) {
    if (min_positive.sign() <= 0) throw std::domain_error("minimal c1c2 must be positive, got " + min_positive.to_string());
    return max_cube / min_positive;
}

std::vector<std::pair<std::int64_t, int>> prime_factorization(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorization needs n >= 1");
    std::vector<std::pair<std::int64_t, int>> factors;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

}  // namespace orr
