#include "k3pol/error.hpp"
#include "k3pol/integer.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace k3pol;

TEST(Integer, GcdAndContent) {
  EXPECT_EQ(gcd(Integer(12), Integer(-18)), 6);
  EXPECT_EQ(gcd(Integer(0), Integer(0)), 0);
  EXPECT_EQ(gcd(Integer(0), Integer(-7)), 7);
  IntVector v{Integer(4), Integer(-6), Integer(10)};
  EXPECT_EQ(content(v), 2);
  IntVector z{Integer(0), Integer(0)};
  EXPECT_EQ(content(z), 0);
  EXPECT_TRUE(is_zero(z));
  EXPECT_FALSE(is_zero(v));
}

TEST(Integer, ExtendedGcdMatchesStdGcd) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-10000, 10000);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t a = dist(rng), b = dist(rng);
    const auto r = extended_gcd(Integer(a), Integer(b));
    EXPECT_EQ(r.g, std::gcd(a, b));
    EXPECT_EQ(r.x * a + r.y * b, r.g);
  }
}

TEST(Integer, FloorDivAndModAreEuclideanForPositiveDivisor) {
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
  EXPECT_EQ(floor_div(Integer(7), Integer(2)), 3);
  EXPECT_EQ(mod(Integer(-7), Integer(3)), 2);
  EXPECT_EQ(mod(Integer(7), Integer(3)), 1);
  for (int a = -20; a <= 20; ++a)
    for (int b = 1; b <= 6; ++b) {
      const Integer q = floor_div(Integer(a), Integer(b));
      const Integer r = mod(Integer(a), Integer(b));
      EXPECT_EQ(q * b + r, a);
      EXPECT_GE(r, 0);
      EXPECT_LT(r, b);
    }
}

TEST(Integer, ParsingAcceptsBigValues) {
  const Integer big = parse_integer("123456789012345678901234567890");
  EXPECT_EQ(to_string(big), "123456789012345678901234567890");
  EXPECT_EQ(parse_integer("-42"), -42);
  EXPECT_EQ(to_string(parse_rational("6/-4")), "-3/2");
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
}

TEST(Integer, ParsingRejectsGarbage) {
  for (const char* s : {"", "-", "1.5", "12a", " 3", "0x10", "+"})
    EXPECT_THROW(parse_integer(s), Error) << s;
  for (const char* s : {"1/0", "/2", "1/", "a/b", "1//2"})
    EXPECT_THROW(parse_rational(s), Error) << s;
}

TEST(Integer, ClearDenominators) {
  RationalVector v{Rational(1, 2), Rational(-1, 3), Rational(0)};
  const IntVector c = clear_denominators(v);
  EXPECT_EQ(c, (IntVector{3, -2, 0}));
  EXPECT_EQ(to_rational(c)[0], Rational(3));
}
