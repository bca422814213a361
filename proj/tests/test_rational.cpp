#include "gcond/rational.hpp"

#include <doctest.h>

using namespace gcond;

TEST_CASE("rationals are canonical and exact") {
  Rational a(2, 6);
  CHECK(a == Rational(1, 3));
  CHECK(numerator(Rational(-4, 8)) == -1);
  CHECK(denominator(Rational(-4, 8)) == 2);
  CHECK(to_string(Rational(7)) == "7");
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("parsing accepts integers and fractions") {
  CHECK(*parse_rational("42") == Rational(42));
  CHECK(*parse_rational("-5/10") == Rational(-1, 2));
  CHECK(*parse_rational("+3") == Rational(3));
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("a/b").has_value());
  CHECK_FALSE(parse_rational("").has_value());
  CHECK_FALSE(parse_rational("1.5").has_value());
}
