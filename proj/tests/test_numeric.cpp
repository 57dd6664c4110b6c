#include <gtest/gtest.h>

#include "intseq/numeric.hpp"

namespace intseq {
namespace {

TEST(Decimal, FixedRoundsHalfToEven) {
  EXPECT_EQ(to_fixed(BigInt(1), BigInt(8), 2), "0.12");   // 0.125 -> even
  EXPECT_EQ(to_fixed(BigInt(3), BigInt(8), 2), "0.38");   // 0.375 -> even
  EXPECT_EQ(to_fixed(BigInt(5), BigInt(2), 0), "2");      // 2.5 -> 2
  EXPECT_EQ(to_fixed(BigInt(7), BigInt(2), 0), "4");      // 3.5 -> 4
  EXPECT_EQ(to_fixed(BigInt(29), BigInt(-12), 4), "-2.4167");
  EXPECT_EQ(to_fixed(BigInt(70), BigInt(169), 5), "0.41420");
}

TEST(Decimal, FixedPadsAndDropsNegativeZero) {
  EXPECT_EQ(to_fixed(BigInt(1), BigInt(1000), 2), "0.00");
  EXPECT_EQ(to_fixed(BigInt(-1), BigInt(1000), 2), "0.00");
  EXPECT_EQ(to_fixed(BigInt(3), BigInt(100), 4), "0.0300");
  EXPECT_EQ(to_fixed(BigInt(12), BigInt(1), 0), "12");
}

TEST(Decimal, SignificantDigits) {
  EXPECT_EQ(to_significant(BigInt(169), BigInt(-70), 5), "-2.4143");
  EXPECT_EQ(to_significant(BigInt(70), BigInt(169), 5), "0.41420");
  EXPECT_EQ(to_significant(BigInt(1), BigInt(3000), 3), "0.000333");
  EXPECT_EQ(to_significant(BigInt(123456), BigInt(1), 3), "123000");
  EXPECT_EQ(to_significant(BigInt(0), BigInt(5), 4), "0.000");
  // carry into a new leading digit keeps the digit count
  EXPECT_EQ(to_significant(BigInt(999995), BigInt(100000), 5), "10.000");
}

TEST(Decimal, ExponentIsExact) {
  EXPECT_EQ(decimal_exponent(BigInt(1), BigInt(1)), 0);
  EXPECT_EQ(decimal_exponent(BigInt(999), BigInt(1)), 2);
  EXPECT_EQ(decimal_exponent(BigInt(1000), BigInt(1)), 3);
  EXPECT_EQ(decimal_exponent(BigInt(1), BigInt(1000)), -3);
  EXPECT_EQ(decimal_exponent(BigInt(1), BigInt(1001)), -4);
}

TEST(Decimal, RoundSignificantIsNearestDecimal) {
  EXPECT_EQ(round_significant(Rational(BigInt(2), BigInt(3)), 3), Rational(BigInt(667), BigInt(1000)));
  EXPECT_EQ(round_significant(Rational(BigInt(-12345)), 2), Rational(-12000));
}

TEST(Ratio, ToDoubleHandlesHugeOperands) {
  const BigInt big = pow10(400);
  EXPECT_DOUBLE_EQ(ratio_to_double(3 * big, 2 * big), 1.5);
  EXPECT_DOUBLE_EQ(ratio_to_double(-big, 4 * big), -0.25);
  EXPECT_EQ(bit_length(BigInt(0)), 0u);
  EXPECT_EQ(bit_length(BigInt(-8)), 4u);
}

}  // namespace
}  // namespace intseq
