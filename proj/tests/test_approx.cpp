#include <gtest/gtest.h>

#include <string>

#include "smeadow/approx.hpp"
#include "smeadow/random.hpp"

using namespace smeadow;

namespace {

// Reference digits computed with 50-digit decimal arithmetic outside this code base.
constexpr const char* kSqrt2 = "1.41421356237309504880";
constexpr const char* kSqrt2PlusSqrt3 = "3.14626436994197234232";
constexpr const char* kNested = "1.55377397403003730734";  // √(1 + √2)
constexpr const char* kSmallGap = "0.06685663237898997873";  // √(1 + √5) - √3

std::string truncated(const char* ref, unsigned digits) {
  const std::string s(ref);
  return s.substr(0, s.find('.') + 1 + digits);
}

TEST(ApproxDecimal, Rationals) {
  Session s;
  EXPECT_EQ(approx_decimal(s.rational(1, 2), 3), "0.500");
  EXPECT_EQ(approx_decimal(s.rational(-1, 3), 4), "-0.3333");
  EXPECT_EQ(approx_decimal(s.rational(22, 7), 1), "3.1");
  EXPECT_EQ(approx_decimal(s.zero(), 2), "0.00");
  EXPECT_THROW(approx_decimal(s.one(), 0), std::invalid_argument);
}

TEST(ApproxDecimal, Radicals) {
  Session s;
  const Real r2 = ssqrt(s.rational(2));
  EXPECT_EQ(approx_decimal(r2, 7), "1.4142135");
  EXPECT_EQ(approx_decimal(ssqrt(s.rational(-2)), 4), "-1.4142");
  EXPECT_EQ(approx_decimal(ssqrt(s.rational(8)), 7), "2.8284271");
  EXPECT_EQ(approx_decimal(inv(r2), 7), "0.7071067");
  for (unsigned d = 1; d <= 20; ++d) EXPECT_EQ(approx_decimal(r2, d), truncated(kSqrt2, d)) << d;
}

TEST(ApproxDecimal, MultiLevelAndNested) {
  Session s;
  const Real sum = ssqrt(s.rational(2)) + ssqrt(s.rational(3));
  const Real nested = ssqrt(s.one() + ssqrt(s.rational(2)));
  const Real gap = ssqrt(s.one() + ssqrt(s.rational(5))) - ssqrt(s.rational(3));
  EXPECT_EQ(approx_decimal(sum, 18), truncated(kSqrt2PlusSqrt3, 18));
  EXPECT_EQ(approx_decimal(nested, 18), truncated(kNested, 18));
  EXPECT_EQ(approx_decimal(gap, 18), truncated(kSmallGap, 18));
}

TEST(Enclose, ContainsAndShrinks) {
  Session s;
  const Real r2 = ssqrt(s.rational(2));
  const Interval coarse = enclose(r2, 16);
  const Interval fine = enclose(r2, 200);
  EXPECT_LE(coarse.lo, fine.lo);
  EXPECT_GE(coarse.hi, fine.hi);
  EXPECT_LT(fine.width(), Rational(1, 1000000));
  EXPECT_LT(fine.lo * fine.lo, Rational(2));
  EXPECT_GT(fine.hi * fine.hi, Rational(2));
}

// The interval oracle and the exact kernel never disagree.
TEST(Enclose, CoherentWithExactOrder) {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Session s;
    const Real a = random_real(rng, s);
    const Real b = random_real(rng, s);
    const Interval ia = enclose(a, 256), ib = enclose(b, 256);
    switch (compare(a, b)) {
      case Sign::zero: EXPECT_TRUE(ia.overlaps(ib)); break;
      case Sign::positive: EXPECT_GT(ia.hi, ib.lo); break;
      case Sign::negative: EXPECT_LT(ia.lo, ib.hi); break;
    }
    const Interval ia_fine = enclose(a, 1024);
    if (sign(a) == Sign::positive) {
      EXPECT_GT(ia_fine.hi, 0);
    }
    if (sign(a) == Sign::negative) {
      EXPECT_LT(ia_fine.lo, 0);
    }
  }
}

}  // namespace
