#include "orr/integrality.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace orr {

namespace {

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    const std::int64_t step = b / std::gcd(a, b);
    if (a > std::numeric_limits<std::int64_t>::max() / step) throw std::overflow_error("residue modulus overflow");
    return a * step;
}

// Distinct contribution vectors of index r, scaled to `modulus` (a multiple of 2r).
std::vector<std::vector<std::int64_t>> contributions(std::int64_t r, int depth, std::int64_t modulus) {
    const std::int64_t scale = modulus / (2 * r);
    std::vector<std::vector<std::int64_t>> out;
    for (auto b : admissible_b_values(r)) {
        auto v = point_residues(BasketPoint(b, r), depth);
        for (auto& x : v) x = (x * scale) % modulus;
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<std::int64_t> point_residues(const BasketPoint& point, int depth) {
    if (depth < 2) throw std::invalid_argument("integrality depth must be >= 2");
    const std::int64_t r = point.r();
    std::vector<std::int64_t> out;
    out.reserve(depth - 1);
    std::int64_t running = 0;
    for (std::int64_t j = 1; j < depth; ++j) {
        const std::int64_t jb = residue(j, point.b(), r);
        running = (running + jb * (r - jb)) % (2 * r);
        out.push_back(running);  // l(j+1) numerator over 2r
    }
    return out;
}

ResidueFrontier::ResidueFrontier(int depth) : width_(depth - 1) {
    if (depth < 2) throw std::invalid_argument("integrality depth must be >= 2");
    flat_.assign(width_, 0);
}

void ResidueFrontier::rescale(std::int64_t new_modulus) {
    if (new_modulus == modulus_) return;
    const std::int64_t scale = new_modulus / modulus_;
    for (auto& x : flat_) x *= scale;
    modulus_ = new_modulus;
}

void ResidueFrontier::normalize() {
    const std::size_t rows = size();
    if (width_ == 1) {
        std::sort(flat_.begin(), flat_.end());
        flat_.erase(std::unique(flat_.begin(), flat_.end()), flat_.end());
        return;
    }
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), 0);
    auto row_less = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(flat_.begin() + a * width_, flat_.begin() + (a + 1) * width_,
                                            flat_.begin() + b * width_, flat_.begin() + (b + 1) * width_);
    };
    auto row_equal = [&](std::size_t a, std::size_t b) {
        return std::equal(flat_.begin() + a * width_, flat_.begin() + (a + 1) * width_, flat_.begin() + b * width_);
    };
    std::sort(order.begin(), order.end(), row_less);
    std::vector<std::int64_t> out;
    out.reserve(flat_.size());
    for (std::size_t i = 0; i < rows; ++i) {
        if (i > 0 && row_equal(order[i], order[i - 1])) continue;
        out.insert(out.end(), flat_.begin() + order[i] * width_, flat_.begin() + (order[i] + 1) * width_);
    }
    flat_ = std::move(out);
}

ResidueFrontier ResidueFrontier::extended(std::int64_t r, std::int64_t count) const {
    ResidueFrontier next = *this;
    next.rescale(checked_lcm(modulus_, 2 * r));
    const auto steps = contributions(r, depth(), next.modulus_);
    const std::int64_t mod = next.modulus_;
    for (std::int64_t k = 0; k < count; ++k) {
        std::vector<std::int64_t> grown;
        grown.reserve(next.flat_.size() * steps.size());
        for (std::size_t row = 0; row < next.size(); ++row) {
            for (const auto& step : steps) {
                for (int c = 0; c < width_; ++c) {
                    std::int64_t x = next.flat_[row * width_ + c] + step[c];
                    grown.push_back(x >= mod ? x - mod : x);
                }
            }
        }
        next.flat_ = std::move(grown);
        next.normalize();
    }
    return next;
}

bool ResidueFrontier::contains_zero() const {
    return !flat_.empty() && std::all_of(flat_.begin(), flat_.begin() + width_, [](auto x) { return x == 0; });
}

bool ResidueFrontier::contains(const std::vector<std::int64_t>& residues, std::int64_t modulus) const {
    if (static_cast<int>(residues.size()) != width_) return false;
    // Bring both sides onto lcm(modulus, modulus_); our rows are exact multiples there.
    const std::int64_t common = checked_lcm(modulus, modulus_);
    const std::int64_t up = common / modulus;
    const std::int64_t ours = common / modulus_;
    std::vector<std::int64_t> key(width_);
    for (int c = 0; c < width_; ++c) {
        const std::int64_t x = (((residues[c] % modulus) + modulus) % modulus) * up;
        if (x % ours != 0) return false;
        key[c] = x / ours;
    }
    for (std::size_t lo = 0, hi = size(); lo < hi;) {
        const std::size_t mid = (lo + hi) / 2;
        auto row = flat_.begin() + mid * width_;
        if (std::equal(key.begin(), key.end(), row)) return true;
        if (std::lexicographical_compare(row, row + width_, key.begin(), key.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return false;
}

IntegralBasketResult exists_integral_basket(const IndexMultiset& indices, int depth) {
    if (depth < 2) throw std::invalid_argument("integrality depth must be >= 2");
    const auto slots = indices.expanded();
    const std::size_t n = slots.size();

    // suffix[i]: residues reachable by slots i..n-1.
    std::vector<ResidueFrontier> suffix(n + 1, ResidueFrontier(depth));
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1].extended(slots[i]);
    if (!suffix[0].contains_zero()) return {};

    std::int64_t modulus = 1;
    for (auto r : slots) modulus = checked_lcm(modulus, 2 * r);

    // Greedy: the smallest b that still admits a completion. Any completion
    // value for the same index could have been chosen here, so the picks are
    // non-decreasing within an index and the result is lexicographically least.
    std::vector<std::int64_t> acc(depth - 1, 0);
    std::vector<BasketPoint> chosen;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t r = slots[i];
        const std::int64_t scale = modulus / (2 * r);
        bool placed = false;
        for (auto b : admissible_b_values(r)) {
            const BasketPoint point(b, r);
            auto step = point_residues(point, depth);
            std::vector<std::int64_t> need(depth - 1);
            for (int c = 0; c < depth - 1; ++c) need[c] = (modulus - (acc[c] + step[c] * scale) % modulus) % modulus;
            if (suffix[i + 1].contains(need, modulus)) {
                for (int c = 0; c < depth - 1; ++c) acc[c] = (acc[c] + step[c] * scale) % modulus;
                chosen.push_back(point);
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("integrality witness reconstruction failed");
    }
    return {true, Basket::from_points(chosen)};
}

}  // namespace orr
