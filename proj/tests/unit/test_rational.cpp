#include <doctest.h>

#include "g2calc/error.hpp"
#include "g2calc/rational.hpp"

using g2calc::Error;
using g2calc::Rational;

TEST_CASE("arithmetic is exact and canonical") {
  const Rational a(1, 3);
  const Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((-a).str() == "-1/3");
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(7, 1).str() == "7");
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(0));
  CHECK(Rational(2, 4).is_negative() == false);
  CHECK(Rational(-1, 7).is_negative());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(5, 5).is_one());
  CHECK(Rational(8, 4).is_integer());
  CHECK(!Rational(9, 4).is_integer());
}

TEST_CASE("string parsing is strict") {
  CHECK(Rational::from_string("22/7") == Rational(22, 7));
  CHECK(Rational::from_string("-3") == Rational(-3));
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::from_string(""), Error);
  CHECK_THROWS_AS(Rational::from_string("1/"), Error);
  CHECK_THROWS_AS(Rational::from_string("a/2"), Error);
  CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
  CHECK_THROWS_AS(Rational::from_string(" 1"), Error);
  CHECK_THROWS_AS(Rational::from_string("1.5"), Error);
}

TEST_CASE("division guards") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
}

TEST_CASE("powers") {
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-2).pow(5) == Rational(-32));
}

TEST_CASE("exact roots") {
  CHECK(Rational(4).exact_nth_root(2) == Rational(2));
  CHECK(Rational(8, 27).exact_nth_root(3) == Rational(2, 3));
  CHECK(Rational(-8).exact_nth_root(3) == Rational(-2));
  CHECK(!Rational(2).exact_nth_root(2).has_value());
  CHECK(!Rational(-4).exact_nth_root(2).has_value());
  CHECK(Rational(0).exact_nth_root(5) == Rational(0));

  // The kind of signed ninth root the metric derivation relies on.
  const Rational v(-2187, 3125);
  CHECK(v.pow(9).exact_nth_root(9) == v);
  CHECK(!(v.pow(9) + Rational(1, 5)).exact_nth_root(9).has_value());
}
