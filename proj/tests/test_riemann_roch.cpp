#include "orr/riemann_roch.hpp"

#include "oracle/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace orr;

TEST_SUITE("riemann_roch") {

TEST_CASE("basket point normalization is enforced") {
    CHECK_NOTHROW(BasketPoint(1, 2));
    CHECK_NOTHROW(BasketPoint(3, 7));
    CHECK_THROWS_AS(BasketPoint(2, 4), std::invalid_argument);  // gcd 2
    CHECK_THROWS_AS(BasketPoint(4, 7), std::invalid_argument);  // 2b > r
    CHECK_THROWS_AS(BasketPoint(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(BasketPoint(1, 1), std::invalid_argument);
    CHECK(BasketPoint::normalized(4, 7) == BasketPoint(3, 7));
    CHECK(BasketPoint::normalized(-1, 5) == BasketPoint(1, 5));
    CHECK_THROWS_AS(BasketPoint::normalized(2, 4), std::invalid_argument);
}

TEST_CASE("admissible b-values") {
    CHECK(admissible_b_values(2) == std::vector<std::int64_t>{1});
    CHECK(admissible_b_values(7) == std::vector<std::int64_t>{1, 2, 3});
    CHECK(admissible_b_values(12) == std::vector<std::int64_t>{1, 5});
}

TEST_CASE("baskets and multisets keep canonical run-length order") {
    const Basket basket{{BasketPoint(1, 4), 1}, {BasketPoint(1, 2), 2}, {BasketPoint(1, 2), 1}, {BasketPoint(2, 7), 1}};
    REQUIRE(basket.entries().size() == 3);
    CHECK(basket.entries()[0] == Basket::Entry{BasketPoint(1, 2), 3});
    CHECK(basket.entries()[2].first == BasketPoint(2, 7));
    CHECK(basket.size() == 5);
    CHECK(IndexMultiset::of(basket) == IndexMultiset{{2, 3}, {4, 1}, {7, 1}});
    CHECK_THROWS_AS(IndexMultiset({{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(IndexMultiset({{3, 0}}), std::invalid_argument);
    CHECK(IndexMultiset::from_indices({9, 2, 7, 2, 4, 2}) == IndexMultiset{{2, 3}, {4, 1}, {7, 1}, {9, 1}});
}

TEST_CASE("residue") {
    CHECK(residue(1, 1, 2) == 1);
    CHECK(residue(2, 1, 2) == 0);
    CHECK(residue(3, 2, 5) == 1);
}

TEST_CASE("point_correction") {
    CHECK(point_correction(BasketPoint(1, 2), 2) == Rational(1, 4));
    CHECK(point_correction(BasketPoint(3, 7), 1) == Rational(0));
    CHECK(point_correction(BasketPoint(1, 5), 6) == Rational(2));
    CHECK_THROWS_AS(point_correction(BasketPoint(1, 5), 0), std::invalid_argument);
}

TEST_CASE("l_value") {
    const Basket sevens = Basket::from_points({BasketPoint(1, 7), BasketPoint(2, 7), BasketPoint(3, 7)});
    CHECK(l_value(sevens, 2) == Rational(2));
    CHECK(l_value(Basket{}, 5) == Rational(0));
    CHECK(l_value(Basket{{BasketPoint(1, 2), 16}}, 2) == Rational(4));
    CHECK(l_value(sevens, 1) == Rational(0));
}

TEST_CASE("chi_minus_nK") {
    const Basket sixteen{{BasketPoint(1, 2), 16}};
    CHECK(chi_minus_nK(sixteen, {3, Rational(5, 7)}, 0) == Rational(3));
    CHECK(chi_minus_nK(Basket{}, {1, Rational(2)}, 1) == Rational(4));
    CHECK(chi_minus_nK(Basket{}, {1, Rational(9, 4)}, 1) == Rational(9, 8) + Rational(3));
    CHECK(chi_minus_nK(sixteen, {1, Rational(0)}, 1) == Rational(-1));
    CHECK_THROWS_AS(chi_minus_nK(sixteen, {1, Rational(0)}, -1), std::invalid_argument);
}

TEST_CASE("c1c2_from_indices") {
    CHECK(c1c2_from_indices(IndexMultiset{{2, 16}}, 1) == Rational(0));
    for (std::int64_t chi : {0, 1, 2}) CHECK(c1c2_from_indices({}, chi) == Rational(24 * chi));
    CHECK(c1c2_from_indices(IndexMultiset{{2, 3}, {4, 1}, {7, 1}, {9, 1}}, 1) == Rational(1, 252));
    CHECK(c1c2_from_indices(IndexMultiset{{7, 3}}, 1) == Rational(24, 7));
}

TEST_CASE("cartier_index") {
    CHECK(cartier_index(IndexMultiset{{2, 3}, {4, 1}, {8, 2}}) == 8);
    CHECK(cartier_index({}) == 1);
    CHECK(cartier_index(IndexMultiset{{2, 1}, {3, 1}, {5, 2}, {6, 1}}) == 30);
}

TEST_CASE("property: full-period sum equals (r^2 - 1)/12 for r <= 50") {
    int cases = 0;
    for (std::int64_t r = 2; r <= 50; ++r) {
        for (std::int64_t b = 1; 2 * b <= r; ++b) {
            if (std::gcd(b, r) != 1) continue;
            ++cases;
            const Rational got = point_correction(BasketPoint(b, r), r + 1);
            CHECK_MESSAGE(got == Rational(r * r - 1, 12), "b=" << b << " r=" << r);
            const auto ref = oracle::l_point(b, r, r + 1);
            CHECK(got == Rational(ref.num, ref.den));
        }
    }
    CHECK(cases > 200);
}

TEST_CASE("property: first-term symmetry under b -> r - b") {
    for (std::int64_t r = 2; r <= 60; ++r)
        for (std::int64_t b = 1; b < r; ++b)
            if (std::gcd(b, r) == 1) CHECK(Rational(b * (r - b), 2 * r) == Rational((r - b) * b, 2 * r));
}

TEST_CASE("property: appending an index lowers c1c2 by r - 1/r") {
    auto rng = test_support::rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto base = test_support::random_indices(rng, 6, 24);
        const std::int64_t r = test_support::uniform(rng, 2, 48);
        auto grown_list = base.expanded();
        grown_list.push_back(r);
        const auto grown = IndexMultiset::from_indices(grown_list);
        const Rational drop = c1c2_from_indices(base, 1) - c1c2_from_indices(grown, 1);
        CHECK(drop == Rational(r) - Rational(1, r));
        CHECK(drop >= Rational(3, 2));
    }
}

TEST_CASE("property: Euler identity round trip") {
    auto rng = test_support::rng(12);
    for (int i = 0; i < 200; ++i) {
        const auto indices = test_support::random_indices(rng, 10, 30);
        const std::int64_t chi = test_support::uniform(rng, -3, 5);
        CHECK((c1c2_from_indices(indices, chi) + indices.weight()) / Rational(24) == Rational(chi));
    }
}

TEST_CASE("property: with K^3 = 0, (2n+1) chi - chi(-nK) = l(n+1)") {
    auto rng = test_support::rng(13);
    for (int i = 0; i < 100; ++i) {
        const auto basket = test_support::random_basket(rng, 6, 20);
        const std::int64_t chi = test_support::uniform(rng, 0, 2);
        for (std::int64_t n = 0; n <= 6; ++n)
            CHECK(Rational(2 * n + 1) * Rational(chi) - chi_minus_nK(basket, {chi, Rational(0)}, n) == l_value(basket, n + 1));
        CHECK(chi_minus_nK(basket, {chi, Rational(test_support::uniform(rng, -9, 9), 7)}, 0) == Rational(chi));
    }
}

TEST_CASE("property: 0 <= l(2) <= sum r/8 and each l(m) matches the oracle") {
    auto rng = test_support::rng(14);
    for (int i = 0; i < 150; ++i) {
        const auto basket = test_support::random_basket(rng, 8, 30);
        const Rational l2 = l_value(basket, 2);
        Rational bound;
        oracle::Frac ref3(0);
        for (const auto& p : basket.expanded()) {
            bound += Rational(p.r(), 8);
            ref3 = ref3 + oracle::l_point(p.b(), p.r(), 3);
        }
        CHECK(l2.sign() >= 0);
        CHECK(l2 <= bound);
        CHECK(l_value(basket, 3) == Rational(ref3.num, ref3.den));
        CHECK(gcd(l2.numerator(), l2.denominator()) == 1);
    }
}

}
