#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gamefix/errors.hpp"
#include "gamefix/rational.hpp"

using namespace gamefix;

TEST_CASE("parses integers, fractions, and decimals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("19/30") == Rational(19, 30));
  CHECK(parse_rational("-11/22") == Rational(-1, 2));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("0.0") == Rational(0));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("4.") == Rational(4));
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
  CHECK_THROWS_AS(parse_rational("-"), ParseError);
  CHECK_THROWS_AS(parse_rational("."), ParseError);
  CHECK_THROWS_AS(parse_rational("1 /2"), ParseError);
}

TEST_CASE("formats in lowest terms, integers without denominator") {
  CHECK(format_rational(Rational(19, 30)) == "19/30");
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(-3, 4)) == "-3/4");
  CHECK(format_rational(parse_rational("10/21")) == "10/21");
}

TEST_CASE("format and parse round-trip") {
  for (int num = -12; num <= 12; ++num) {
    for (int den = 1; den <= 9; ++den) {
      Rational value(num, den);
      CHECK(parse_rational(format_rational(value)) == value);
    }
  }
}

TEST_CASE("positive part clamps at zero") {
  CHECK(positive_part(Rational(3)) == Rational(3));
  CHECK(positive_part(Rational(-3)) == Rational(0));
  CHECK(positive_part(Rational(0)) == Rational(0));
  CHECK(positive_part(Rational(-1, 7)) == Rational(0));
  CHECK(positive_part(Rational(1, 7)) == Rational(1, 7));
}

TEST_CASE("double conversion is exact on dyadics") {
  CHECK(to_double(Rational(1, 2)) == 0.5);
  CHECK(to_double(Rational(3, 4)) == 0.75);
  CHECK(Rational(0.5) == Rational(1, 2));   // exact binary fraction
  CHECK(Rational(0.1) != Rational(1, 10));  // 0.1 is not representable
}

TEST_CASE("17-digit doubles round-trip") {
  for (double v : {0.1, 1.0 / 3.0, 1e-9, 123456.789, 1.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}
