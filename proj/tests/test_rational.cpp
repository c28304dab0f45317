#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorval/rational.hpp"

#include <random>
#include <stdexcept>

using namespace cantorval;

TEST_CASE("parsing accepts canonical and non-canonical fractions") {
    CHECK(parse_rational("5/3") == Rational(5, 3));
    CHECK(parse_rational("-1/2") == Rational(-1) / 2);
    CHECK(parse_rational("0/1") == 0);
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("4/8") == Rational(1, 2));
    CHECK(parse_rational("3/-6") == Rational(-1) / 2);
    CHECK(parse_rational("-10/-4") == Rational(5, 2));
    CHECK(parse_rational("+3/4") == Rational(3, 4));
}

TEST_CASE("parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/ 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("-"), std::invalid_argument);
}

TEST_CASE("fraction strings always carry a denominator") {
    CHECK(to_fraction_string(Rational(5, 3)) == "5/3");
    CHECK(to_fraction_string(Rational(-1) / 2) == "-1/2");
    CHECK(to_fraction_string(Rational(0)) == "0/1");
    CHECK(to_fraction_string(Rational(7)) == "7/1");
}

TEST_CASE("round trip through text") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> num(-5000, 5000);
    std::uniform_int_distribution<long> den(1, 5000);
    for (int i = 0; i < 500; ++i) {
        const Rational r = Rational(num(rng)) / den(rng);
        CHECK(parse_rational(to_fraction_string(r)) == r);
    }
}

TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(to_decimal_string(Rational(2, 3), 4) == "0.6667");
    CHECK(to_decimal_string(Rational(1, 4), 2) == "0.25");
    CHECK(to_decimal_string(Rational(1, 8), 2) == "0.13");
    CHECK(to_decimal_string(Rational(-1, 8), 2) == "-0.13");
    CHECK(to_decimal_string(Rational(5, 3), 0) == "2");
    CHECK(to_decimal_string(Rational(-1, 1000), 2) == "0.00");
    CHECK(to_decimal_string(Rational(3), 3) == "3.000");
}

TEST_CASE("pow and floor") {
    CHECK(rational_pow(Rational(1, 4), 0) == 1);
    CHECK(rational_pow(Rational(1, 4), 3) == Rational(1, 64));
    CHECK(rational_pow(Rational(-2, 3), 2) == Rational(4, 9));
    CHECK(rational_floor(Rational(7, 3)) == 2);
    CHECK(rational_floor(Rational(-7, 3)) == -3);
    CHECK(rational_floor(Rational(6, 3)) == 2);
    CHECK(rational_floor(Rational(-6, 3)) == -2);
    CHECK(rational_floor(Rational(0)) == 0);
}
