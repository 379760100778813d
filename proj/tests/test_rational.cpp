#include <catch2/catch_amalgamated.hpp>

#include "calabi/rational.hpp"

using namespace calabi;

TEST_CASE("parsing rationals from strings") {
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("3/7") == Rational(3, 7));
    CHECK(parse_rational("-3/7") == Rational(-3, 7));
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational("2e-3") == Rational(1, 500));
    CHECK(parse_rational("2.5e+2") == Rational(250));
    CHECK(parse_rational("  1.5 ") == Rational(3, 2));
    CHECK(parse_rational("1e0") == Rational(1));

    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
}

TEST_CASE("fraction formatting round-trips") {
    CHECK(to_fraction_string(Rational(3, 7)) == "3/7");
    CHECK(to_fraction_string(Rational(-3, 7)) == "-3/7");
    CHECK(to_fraction_string(Rational(5)) == "5");
    CHECK(to_fraction_string(Rational(0)) == "0");
    for (const char* s : {"355/113", "-2/9", "17", "0"})
        CHECK(to_fraction_string(parse_rational(s)) == s);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(5, 0) == Rational(1));
    CHECK(binomial(5, 6) == Rational(0));
    CHECK(binomial(5, -1) == Rational(0));
    CHECK(binomial(60, 30) == Rational(BigInt("118264581564861424")));
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("integer powers") {
    CHECK(rational_pow(Rational(0), 0) == Rational(1));
    CHECK(rational_pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK_THROWS_AS(rational_pow(Rational(2), -1), std::invalid_argument);
}
