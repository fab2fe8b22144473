// Copyright 2026 The ewlext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ewlext/rational.h"

#include <stdexcept>

#include "ewlext/angle.h"
#include "gtest/gtest.h"

namespace ewlext {
namespace {

TEST(RationalTest, ReducesAndFormats) {
  EXPECT_EQ(Rational(6, 8).ToString(), "3/4");
  EXPECT_EQ(Rational(4, -2).ToString(), "-2");
  EXPECT_EQ(Rational(0, 5).ToString(), "0");
  EXPECT_EQ(Rational(-3, 9).Numerator(), "-1");
  EXPECT_EQ(Rational(-3, 9).Denominator(), "3");
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Abs(Rational(-7, 3)), Rational(7, 3));
}

TEST(RationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(RationalTest, Floor) {
  EXPECT_EQ(Floor(Rational(7, 2)), 3);
  EXPECT_EQ(Floor(Rational(-7, 2)), -4);
  EXPECT_EQ(Floor(Rational(-4)), -4);
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::Parse("3"), Rational(3));
  EXPECT_EQ(Rational::Parse("-14/4"), Rational(-7, 2));
  EXPECT_EQ(Rational::Parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::Parse("-1.5e-3"), Rational(-3, 2000));
  EXPECT_EQ(Rational::Parse("2E2"), Rational(200));
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "1.2.3", "3/4pi", "1e"}) {
    EXPECT_THROW(Rational::Parse(bad), std::invalid_argument) << bad;
  }
}

TEST(RationalTest, ParseRoundTripsFormatting) {
  for (const Rational r : {Rational(51, 25), Rational(-9, 4), Rational(0)}) {
    EXPECT_EQ(Rational::Parse(r.ToString()), r);
  }
}

TEST(RationalTest, Approximate) {
  EXPECT_EQ(Rational::Approximate(0.75, 1e-12, 1000), Rational(3, 4));
  EXPECT_EQ(Rational::Approximate(-2.0 / 3.0, 1e-12, 1000), Rational(-2, 3));
  EXPECT_EQ(Rational::Approximate(3.0, 1e-12, 1000), Rational(3));
  EXPECT_FALSE(Rational::Approximate(0.1234567891234, 1e-14, 1000).has_value());
}

TEST(AngleTest, ParsesPiMultiples) {
  EXPECT_EQ(Angle::Parse("0"), Angle::PiMultiple(0));
  EXPECT_EQ(Angle::Parse("pi"), Angle::PiMultiple(1));
  EXPECT_EQ(Angle::Parse("-pi"), Angle::PiMultiple(-1));
  EXPECT_EQ(Angle::Parse("1/2pi"), Angle::PiMultiple(Rational(1, 2)));
  EXPECT_EQ(Angle::Parse("3/4*pi"), Angle::PiMultiple(Rational(3, 4)));
  EXPECT_FALSE(Angle::Parse("1.5").IsExact());
  EXPECT_DOUBLE_EQ(Angle::Parse("1.5").ToRadians(), 1.5);
  EXPECT_THROW(Angle::Parse("half"), std::invalid_argument);
}

TEST(AngleTest, FormatsRoundTrip) {
  for (const char* text : {"0", "pi", "-pi", "1/2pi", "7/4pi", "0.3"}) {
    EXPECT_EQ(Angle::Parse(text).ToString(), text);
  }
}

TEST(AngleTest, ExactTrigonometry) {
  EXPECT_EQ(ExactCos(Rational(1, 3)), Rational(1, 2));
  EXPECT_EQ(ExactCos(Rational(1, 2)), Rational(0));
  EXPECT_EQ(ExactSin(Rational(7, 6)), Rational(-1, 2));
  EXPECT_EQ(ExactSin(Rational(3, 2)), Rational(-1));
  EXPECT_FALSE(ExactCos(Rational(1, 4)).has_value());
  EXPECT_FALSE(ExactSin(Rational(1, 8)).has_value());
}

TEST(UnitaryParamsTest, ThetaRangeAndPhaseReduction) {
  EXPECT_THROW(UnitaryParams::Exact(2, 0, 0), DomainError);
  EXPECT_THROW(UnitaryParams::Exact(Rational(-1, 4), 0, 0), DomainError);
  EXPECT_THROW(UnitaryParams::Float(3.5, 0, 0), DomainError);
  EXPECT_NO_THROW(UnitaryParams::Exact(1, 0, 0));
  EXPECT_EQ(UnitaryParams::Exact(0, Rational(5, 2), -1).alpha(),
            Angle::PiMultiple(Rational(1, 2)));
  EXPECT_EQ(UnitaryParams::Exact(0, Rational(5, 2), -1).beta(),
            Angle::PiMultiple(1));
  EXPECT_EQ(UnitaryParams::Q().ToString(), "U(0, 1/2pi, 0)");
}

}  // namespace
}  // namespace ewlext
