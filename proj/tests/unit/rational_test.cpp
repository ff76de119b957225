#include <gtest/gtest.h>

#include "rfvote/errors.hpp"
#include "rfvote/rational.hpp"

namespace rfvote {
namespace {

TEST(ParseRational, Fractions) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("7"), Rational(7));
}

TEST(ParseRational, DecimalsAreExact) {
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("1.5e-2"), Rational(3, 200));
  EXPECT_EQ(parse_rational("2E1"), Rational(20));
}

TEST(ParseRational, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "0.1.2", "1e", "3/4x"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(Formatting, ExactAndDecimal) {
  EXPECT_EQ(to_exact_string(Rational(6, 8)), "3/4");
  EXPECT_EQ(to_exact_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_decimal_string(Rational(1, 3)), "0.333333333333");
  EXPECT_EQ(to_decimal_string(Rational(0)), "0");
  EXPECT_EQ(to_decimal_string(0.5), "0.5");
}

TEST(Arithmetic, BinomialPowerCeil) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(power(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(power(Rational(5, 7), 0), 1);
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(ceil(Rational(3)), 3);
}

}  // namespace
}  // namespace rfvote
