// Copyright 2026 The vaguescore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vaguescore/rational.h"

#include <cstdint>
#include <limits>
#include <stdexcept>

#include <gtest/gtest.h>

namespace vaguescore {
namespace {

TEST(RationalTest, NormalizesToLowestTerms) {
  const Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(Rational(0, 5), Rational());
}

TEST(RationalTest, RejectsZeroDenominator) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(RationalTest, ArithmeticAndOrder) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(2, 3), Rational(3, 5));
}

TEST(RationalTest, DecimalRendering) {
  EXPECT_EQ(Rational(1, 3).to_decimal(), "0.333333");
  EXPECT_EQ(Rational(2, 3).to_decimal(), "0.666667");
  EXPECT_EQ(Rational(9, 10).to_decimal(), "0.900000");
  EXPECT_EQ(Rational(4, 5).to_decimal(), "0.800000");
  EXPECT_EQ(Rational(1, 1).to_decimal(), "1.000000");
  EXPECT_EQ(Rational(1, 2000000).to_decimal(), "0.000001");  // half rounds up
  EXPECT_EQ(Rational(-1, 3).to_decimal(), "-0.333333");
  EXPECT_EQ(Rational(1, 8).to_decimal(2), "0.13");
}

TEST(RationalTest, OverflowThrows) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(Rational(big, 1) + Rational(big, 1), std::overflow_error);
}

}  // namespace
}  // namespace vaguescore
