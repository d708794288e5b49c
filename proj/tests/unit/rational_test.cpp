#include "cliffrep/errors.hpp"
#include "cliffrep/rational.hpp"
#include "cliffrep/signature.hpp"

#include <gtest/gtest.h>

using namespace cliffrep;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(make_rational(6, -8), make_rational(-3, 4));
  EXPECT_EQ(to_string(make_rational(6, -8)), "-3/4");
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
  EXPECT_TRUE(is_zero(make_rational(0, 5)));
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3/4"), make_rational(-3, 4));
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("abc"), InvalidArgument);
  EXPECT_THROW(parse_rational(""), InvalidArgument);
}

TEST(Rational, ZeroDenominator) { EXPECT_THROW(make_rational(1, 0), InvalidArgument); }

TEST(Signature, Basics) {
  Signature s(2, 3);
  EXPECT_EQ(s.n(), 5);
  EXPECT_EQ(s.dimension(), 32u);
  EXPECT_EQ(s.negative_mask(), 0b11100u);
  EXPECT_EQ(to_string(s), "Cl(2,3)");
  EXPECT_THROW(Signature(-1, 2), InvalidArgument);
  EXPECT_THROW(Signature(10, 10), InvalidArgument);
}
