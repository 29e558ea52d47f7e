#include "doctest.h"
#include "oracles.hpp"

#include "hookcontent/partial_fraction.hpp"

using namespace hookcontent;

namespace {

constexpr std::uint64_t kSeed = 0x5eed;

}  // namespace

TEST_CASE("RationalPoint validation") {
    CHECK_NOTHROW(RationalPoint({1}, {}));
    CHECK_THROWS_AS(RationalPoint({1, 2}, {}), std::invalid_argument);
    CHECK_THROWS_AS(RationalPoint({1, 1}, {0}), std::invalid_argument);
    // ordering is not required, only distinct a
    CHECK_NOTHROW(RationalPoint({3, 1}, {2}));
}

TEST_CASE("pf_kernel basics") {
    RationalPoint single({ratio(7, 3)}, {});
    CHECK(pf_kernel(single, 0) == 1);
    CHECK(pf_moment(single, 0) == 1);
    CHECK(pf_moment(single, 3) == pow(ratio(7, 3), 3));
    CHECK_THROWS_AS(pf_kernel(single, 1), std::invalid_argument);
}

TEST_CASE("low moments on random points") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        const auto p = random_point(kSeed, i, 5);
        CAPTURE(i);
        Rational weights = 0;
        for (int j = 0; j <= p.m(); ++j) weights += pf_kernel(p, j);
        CHECK(weights == 1);
        CHECK(pf_moment(p, 0) == 1);
        CHECK(pf_moment(p, 1) == q_k(p, 1));
        CHECK(pf_moment(p, 2) == (q_k(p, 1) * q_k(p, 1) + q_k(p, 2)) / 2);
    }
}

TEST_CASE("random points are reproducible, sorted and distinct") {
    for (std::uint64_t i = 0; i < 20; ++i) {
        const auto p = random_point(kSeed, i, 5);
        const auto q = random_point(kSeed, i, 5);
        CHECK(p.a == q.a);
        CHECK(p.b == q.b);
        CHECK(p.m() <= 5);
        CHECK(std::is_sorted(p.a.begin(), p.a.end()));
        CHECK(std::is_sorted(p.b.begin(), p.b.end()));
        CHECK(std::adjacent_find(p.b.begin(), p.b.end()) == p.b.end());
    }
}

TEST_CASE("pf_expand low orders") {
    CHECK(pf_expand(0) == CoefficientTable{{Partition{}, 1}});
    CHECK(pf_expand(1) == CoefficientTable{{Partition{1}, 1}});
    CHECK(pf_expand(2) == CoefficientTable{{Partition{1, 1}, ratio(1, 2)}, {Partition{2}, ratio(1, 2)}});
    CHECK(to_json(pf_expand(2)) == R"({"1,1":"1/2","2":"1/2"})");
    CHECK(to_json(pf_expand(0)) == R"({"-":"1"})");
}

TEST_CASE("pf_expand coefficients equal 1/z_nu") {
    for (unsigned k = 0; k <= 8; ++k) {
        const auto table = pf_expand(k);
        const auto all = enumerate_partitions(static_cast<int>(k));
        CHECK(table.size() == all.size());
        for (const auto& nu : all) {
            CAPTURE(nu);
            REQUIRE(table.count(nu) == 1);
            CHECK(table.at(nu) == oracle::xi_closed_form(nu));
        }
    }
}

TEST_CASE("pf_expand reconstructs pf_moment") {
    for (unsigned k = 0; k <= 6; ++k) {
        const auto table = pf_expand(k);
        for (std::uint64_t i = 0; i < 50; ++i) {
            const auto p = random_point(kSeed + 1, i, 5);
            CHECK(evaluate(table, p) == pf_moment(p, k));
        }
    }
}

TEST_CASE("unsorted points satisfy the same identity") {
    RationalPoint p({Rational(5), ratio(-1, 2), ratio(3, 4)}, {Rational(2), Rational(-7)});
    for (unsigned k = 0; k <= 6; ++k) CHECK(evaluate(pf_expand(k), p) == pf_moment(p, k));
}
