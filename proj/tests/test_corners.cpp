#include "doctest.h"
#include "oracles.hpp"

#include "hookcontent/corners.hpp"
#include "hookcontent/tableaux.hpp"

using namespace hookcontent;

TEST_CASE("corner profile of (7,5,4,1)") {
    const auto p = corner_profile({7, 5, 4, 1});
    CHECK(p.m == 3);
    CHECK(p.xs == std::vector<int>{1, 2, 6, 8});
    CHECK(p.ys == std::vector<int>{1, 4, 7});
    CHECK(p.outer_coords == std::vector<std::pair<int, int>>{{4, 5}, {3, 7}, {1, 8}});
    CHECK(p.inner_coords == std::vector<std::pair<int, int>>{{4, 5}, {3, 5}, {1, 7}, {0, 8}});
    CHECK(q_k(p, 1) == 17);
}

TEST_CASE("corner profile conventions for small shapes") {
    const auto empty = corner_profile({});
    CHECK(empty.m == 0);
    CHECK(empty.xs == std::vector<int>{1});
    CHECK(empty.ys.empty());
    CHECK(empty.admits_new_row());

    const auto one = corner_profile({1});
    CHECK(one.xs == std::vector<int>{1, 2});
    CHECK(one.ys == std::vector<int>{1});
    CHECK_FALSE(one.admits_new_row());

    const auto two = corner_profile({2});
    CHECK(two.xs == std::vector<int>{1, 3});
    CHECK(two.ys == std::vector<int>{2});
}

TEST_CASE("corner contents match the diagram and interlace") {
    for (int n = 0; n <= 14; ++n) {
        for (const auto& lambda : enumerate_strict(n)) {
            const auto p = corner_profile(lambda);
            CAPTURE(lambda);
            CHECK(p.ys == oracle::removable_contents(lambda));
            std::vector<int> inner(p.xs.begin() + 1, p.xs.end());
            CHECK(inner == oracle::addable_contents_same_length(lambda));
            REQUIRE(p.xs.size() == p.ys.size() + 1);
            CHECK(p.x(0) == 1);
            if (p.m > 0) {
                CHECK(p.x(0) <= p.y(1));
                for (int j = 1; j <= p.m; ++j) {
                    CHECK(p.y(j) < p.x(j));
                    if (j > 1) CHECK(p.x(j - 1) < p.y(j));
                }
                CHECK((p.y(1) == 1) == (lambda.part(lambda.length()) == 1));
            }
        }
    }
}

TEST_CASE("q_1 equals the size") {
    for (int n = 0; n <= 14; ++n)
        for (const auto& lambda : enumerate_strict(n)) CHECK(q_k(lambda, 1) == n);
}

TEST_CASE("q statistics") {
    CHECK(q_k(StrictPartition{7, 5, 4, 1}, 1) == 17);
    CHECK(q_k(StrictPartition{}, 1) == 0);
    CHECK(q_k(StrictPartition{1}, 2) == 1);
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : enumerate_strict(n)) {
            CHECK(q_k(lambda, 0) == 1);
            CHECK(q_nu(lambda, {}) == 1);
            CHECK(q_nu(lambda, {1, 1}) == n * n);
            CHECK(q_nu(lambda, {3, 2, 2}) == q_k(lambda, 3) * q_k(lambda, 2) * q_k(lambda, 2));
        }
    CHECK(q_nu(StrictPartition{1}, {2, 1}) == 1);
}

TEST_CASE("add_box_transitions") {
    const auto t = add_box_transitions({7, 5, 4, 1});
    REQUIRE(t.size() == 3);
    CHECK(t[0].index == 1);
    CHECK(t[0].result == StrictPartition{7, 5, 4, 2});
    CHECK(t[0].content == 2);
    CHECK(t[1].result == StrictPartition{7, 6, 4, 1});
    CHECK(t[1].content == 6);
    CHECK(t[2].result == StrictPartition{8, 5, 4, 1});
    CHECK(t[2].content == 8);
    for (const auto& tr : t) CHECK(tr.multiplicity == 2);

    const auto e = add_box_transitions({});
    REQUIRE(e.size() == 1);
    CHECK(e[0].result == StrictPartition{1});
    CHECK(e[0].multiplicity == 1);

    const auto two = add_box_transitions({2});
    REQUIRE(two.size() == 2);
    CHECK(two[0].result == StrictPartition{2, 1});
    CHECK(two[0].multiplicity == 1);
    CHECK(two[1].result == StrictPartition{3});
    CHECK(two[1].multiplicity == 2);
}

TEST_CASE("transitions are exactly the strict one-box additions") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lambda : enumerate_strict(n)) {
            std::map<StrictPartition, bool> got;
            for (const auto& t : add_box_transitions(lambda)) {
                CHECK(t.multiplicity == (t.index == 0 ? 1 : 2));
                CHECK((t.index == 0) == (t.result.length() > lambda.length()));
                got.emplace(t.result, t.result.length() > lambda.length());
            }
            CHECK(got == oracle::one_box_additions(lambda));
        }
}

TEST_CASE("hook_ratio closed form") {
    CHECK(hook_ratio({1}, 1) == ratio(1, 2));
    CHECK(hook_ratio({}, 0) == 1);
    CHECK(hook_ratio({2}, 0) == ratio(2, 6));
    CHECK_THROWS_AS(hook_ratio({1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(hook_ratio({2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(hook_ratio({2}, -1), std::invalid_argument);
}

TEST_CASE("hook_ratio agrees with direct hook products and sums to one") {
    for (int n = 0; n <= 10; ++n)
        for (const auto& lambda : enumerate_strict(n)) {
            const Integer h = hook_product(lambda);
            Rational weighted = 0;
            for (const auto& t : add_box_transitions(lambda)) {
                Rational ratio = hook_ratio(lambda, t.index);
                CHECK(ratio * Rational(hook_product(t.result)) == Rational(h));
                weighted += t.multiplicity * ratio;
            }
            CHECK(weighted == 1);
        }
}

TEST_CASE("corner_weight at i = 0 vanishes when y_1 = 1") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& lambda : enumerate_strict(n)) {
            const auto p = corner_profile(lambda);
            if (!p.admits_new_row()) CHECK(corner_weight(p, 0) == 0);
        }
}

TEST_CASE("q_shift") {
    CHECK(q_shift({2}, 1, 0) == 0);
    CHECK(q_shift({2}, 1, 2) == 19);
    CHECK(q_k(StrictPartition{3}, 2) - q_k(StrictPartition{2}, 2) == 19);
    CHECK_THROWS_AS(q_shift({1}, 0, 1), std::invalid_argument);
    for (int n = 0; n <= 10; ++n)
        for (const auto& lambda : enumerate_strict(n))
            for (const auto& t : add_box_transitions(lambda)) {
                CHECK(q_shift(lambda, t.index, 1) == 1);
                for (unsigned k = 0; k <= 5; ++k)
                    CHECK(q_shift(lambda, t.index, k) == q_k(t.result, k) - q_k(lambda, k));
            }
}
