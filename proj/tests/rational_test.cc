// Copyright 2026 The fracdim Authors.
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

#include "fracdim/rational.h"

#include <sstream>
#include <stdexcept>

#include "gtest/gtest.h"

namespace fracdim {
namespace {

TEST(RationalTest, CanonicalForm) {
  EXPECT_EQ(Rational(6, 4).ToString(), "3/2");
  EXPECT_EQ(Rational(4, -2).ToString(), "-2");
  EXPECT_EQ(Rational(0, 7).ToString(), "0");
  EXPECT_EQ(Rational(-10, -15), Rational(2, 3));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4), Rational(1, 6));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(RationalTest, Ordering) {
  EXPECT_LT(Rational(5, 3), Rational(7, 4));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Min(Rational(3, 2), Rational(4, 3)), Rational(4, 3));
  EXPECT_EQ(Max(Rational(3, 2), Rational(4, 3)), Rational(3, 2));
}

TEST(RationalTest, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::Parse("5/3"), Rational(5, 3));
  EXPECT_EQ(Rational::Parse("-4/6"), Rational(-2, 3));
  EXPECT_EQ(Rational::Parse("12"), Rational(12));
  EXPECT_EQ(Rational::Parse("123456789012345678901234567890/2").ToString(),
            "61728394506172839450617283945");
}

TEST(RationalTest, ParseRejectsGarbage) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "a", "1.5", "--1", "1/2/3"}) {
    EXPECT_THROW(Rational::Parse(bad), std::invalid_argument) << bad;
  }
}

TEST(RationalTest, DecimalRoundsHalfUp) {
  EXPECT_EQ(Rational(5, 3).ToDecimal(4), "1.6667");
  EXPECT_EQ(Rational(1, 8).ToDecimal(2), "0.13");
  EXPECT_EQ(Rational(-1, 3).ToDecimal(3), "-0.333");
  EXPECT_EQ(Rational(7).ToDecimal(0), "7");
  EXPECT_EQ(Rational(1, 1000).ToDecimal(1), "0.0");
}

TEST(RationalTest, CeilAndStream) {
  EXPECT_EQ(Rational(5, 3).Ceil(), 2);
  EXPECT_EQ(Rational(-5, 3).Ceil(), -1);
  EXPECT_EQ(Rational(4).Ceil(), 4);
  std::ostringstream os;
  os << Rational(9, 6);
  EXPECT_EQ(os.str(), "3/2");
}

}  // namespace
}  // namespace fracdim
