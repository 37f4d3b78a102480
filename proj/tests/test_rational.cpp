#include <doctest.h>

#include "rtva/rational.hpp"

using rtva::DomainError;
using rtva::ParseError;
using rtva::Rational;

TEST_CASE("rationals are stored reduced with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).num() == 1);
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(1, -2).num() == -1);
  CHECK(Rational(1, -2).den() == 2);
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7).num() == 0);
  CHECK(Rational(0, 7).den() == 1);
}

TEST_CASE("equal values have equal representation everywhere") {
  Rational a(2, 4), b(1, 2);
  CHECK(a.str() == b.str());
  CHECK(a.hash() == b.hash());
  CHECK(Rational(3, 9).hash() == Rational(1, 3).hash());
  CHECK(Rational(1, 3).hash() != Rational(1, 4).hash());
}

TEST_CASE("zero denominators and zero division are hard errors") {
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(3) / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational(0).pow(-1), DomainError);
}

TEST_CASE("string round trips") {
  for (const char* text : {"-3/10", "2", "0", "7/3", "-1"}) {
    CHECK(Rational::parse(text).str() == text);
  }
  CHECK(Rational::parse("4/6").str() == "2/3");  // reduced on input
  CHECK(Rational(-3, 10).str() == "-3/10");
  CHECK(Rational(2).str() == "2");
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
}

TEST_CASE("arithmetic is exact") {
  Rational x(1, 3);
  CHECK(x + x + x == Rational(1));
  CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(5) / Rational(1, 5) == Rational(25));
  CHECK(-Rational(3, 7) == Rational(-3, 7));
  CHECK(Rational(2).pow(10) == Rational(1024));
  CHECK(Rational(2).pow(-3) == Rational(1, 8));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("comparisons and predicates") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(5, 5).is_one());
  CHECK(Rational(4, 2).is_integer());
  CHECK(!Rational(1, 2).is_integer());
  CHECK(Rational(-2, 3).sign() == -1);
}

TEST_CASE("bit sizes track numerator and denominator") {
  CHECK(Rational(0).num_bits() == 1);
  CHECK(Rational(1).bits() == 1);
  CHECK(Rational(2).num_bits() == 2);
  CHECK(Rational(1, 1024).den_bits() == 11);
  CHECK(Rational(2).pow(100).num_bits() == 101);
}
