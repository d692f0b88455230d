#include <gtest/gtest.h>

#include "lftlab/errors.hpp"
#include "lftlab/rational.hpp"

using namespace lftlab;

TEST(Rational, FormatsCanonically) {
  EXPECT_EQ(to_string(make_rational(6, 16)), "3/8");
  EXPECT_EQ(to_string(make_rational(-4, 2)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/8"), make_rational(3, 8));
  EXPECT_EQ(parse_rational("-6/16"), make_rational(-3, 8));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("0.125"), make_rational(1, 8));
  EXPECT_EQ(parse_rational("-1e-3"), make_rational(-1, 1000));
  EXPECT_EQ(parse_rational("2.5E2"), Rational(250));
}

TEST(Rational, RejectsGarbage) {
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/2/3"), ParseError);
}

TEST(Rational, RoundTripsThroughText) {
  for (long p = -20; p <= 20; ++p) {
    for (long q = 1; q <= 9; ++q) {
      Rational r = make_rational(p, q);
      EXPECT_EQ(parse_rational(to_string(r)), r);
    }
  }
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(floor_to_int(make_rational(4, 3)), 1);
  EXPECT_EQ(floor_to_int(make_rational(-4, 3)), -2);
  EXPECT_EQ(ceil_to_int(make_rational(4, 3)), 2);
  EXPECT_EQ(ceil_to_int(make_rational(-4, 3)), -1);
  EXPECT_EQ(floor_to_int(Rational(2)), 2);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(to_decimal(make_rational(1, 3), 4), "0.3333");
  EXPECT_EQ(to_decimal(make_rational(-3, 8), 2), "-0.38");
  EXPECT_EQ(to_decimal(make_rational(2, 1), 3), "2.000");
}

TEST(Rational, PowersOfTwo) {
  EXPECT_TRUE(is_power_of_two(1));
  EXPECT_TRUE(is_power_of_two(64));
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_FALSE(is_power_of_two(5));
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(5), 3);
  EXPECT_EQ(ceil_log2(8), 3);
}
