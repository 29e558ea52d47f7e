#include "doctest.h"

#include "hookcontent/rational.hpp"

using namespace hookcontent;

TEST_CASE("rational text form is lossless") {
    CHECK(to_string(ratio(1, 2)) == "1/2");
    CHECK(to_string(ratio(4, 2)) == "2");
    CHECK(to_string(ratio(-3, 6)) == "-1/2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("1/2") == ratio(1, 2));
    CHECK(parse_rational("-6/4") == ratio(-3, 2));
    CHECK(parse_rational("17") == 17);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);

    Rational big = Rational(factorial(40)) / Rational(factorial(23) * 7);
    CHECK(parse_rational(to_string(big)) == big);
}

TEST_CASE("binomials and factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(18) == Integer("6402373705728000"));
    CHECK(binom(5, 2) == 10);
    CHECK(binom(1, 2) == 0);
    CHECK(binom(0, 2) == 0);
    CHECK(binom(2, 2) == 1);
    CHECK(binom(3, -1) == 0);
    CHECK(binom(-1, 2) == 0);
    CHECK(binom(0, 0) == 1);
}

TEST_CASE("powers use 0^0 = 1") {
    CHECK(pow(Integer(0), 0) == 1);
    CHECK(pow(Integer(0), 3) == 0);
    CHECK(pow(ratio(2, 3), 3) == ratio(8, 27));
    CHECK(two_pow(10) == 1024);
}
