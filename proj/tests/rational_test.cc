// Copyright 2026 The Contract Menus Authors
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

#include "contracts/rational.h"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

namespace contracts {
namespace {

TEST(RationalTest, Canonicalizes) {
  EXPECT_EQ(rat(2, 4).ToString(), "1/2");
  EXPECT_EQ(rat(-3, -6).ToString(), "1/2");
  EXPECT_EQ(rat(3, -6).ToString(), "-1/2");
  EXPECT_EQ(rat(253, 800).ToString(), "253/800");
  EXPECT_EQ(rat(8, 4).ToString(), "2");
  EXPECT_EQ(Rational(0).ToString(), "0");
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(rat(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational::Parse("3/0"), std::domain_error);
}

TEST(RationalTest, PowInt) {
  EXPECT_EQ(PowInt(rat(1, 2), 3), rat(1, 8));
  EXPECT_EQ(PowInt(Rational(5), 0), Rational(1));
  EXPECT_EQ(PowInt(rat(2, 3), -2), rat(9, 4));
  EXPECT_THROW(PowInt(Rational(0), -1), std::domain_error);
}

TEST(RationalTest, PowIntMatchesRepeatedMultiplication) {
  Rational product = 1;
  for (int i = 0; i < 13; ++i) product *= Rational(12);
  EXPECT_EQ(product.ToString(), "106993205379072");
  EXPECT_EQ(PowInt(Rational(12), 13), product);
  for (int e = 0; e < 40; ++e) {
    Rational slow = 1;
    for (int i = 0; i < e; ++i) slow *= rat(-7, 3);
    EXPECT_EQ(PowInt(rat(-7, 3), e), slow) << e;
  }
}

TEST(RationalTest, ParseRoundTrip) {
  EXPECT_EQ(Rational::Parse("253/800"), rat(253, 800));
  EXPECT_EQ(Rational::Parse("-4"), Rational(-4));
  EXPECT_EQ(Rational::Parse("6/4"), rat(3, 2));
  for (const char* bad : {"", "1/", "/2", "a/b", "1.5", "1/2/3", " 1/2"}) {
    EXPECT_THROW(Rational::Parse(bad), std::invalid_argument) << bad;
  }
  std::mt19937_64 g(7);
  for (int i = 0; i < 500; ++i) {
    const Rational x = rat(static_cast<long long>(g() % 2001) - 1000,
                           static_cast<long long>(g() % 999) + 1);
    EXPECT_EQ(Rational::Parse(x.ToString()), x);
  }
  const Rational huge = PowInt(rat(12, 7), -39);
  EXPECT_EQ(Rational::Parse(huge.ToString()), huge);
}

TEST(RationalTest, FieldAxiomsOnRandomValues) {
  std::mt19937_64 g(11);
  auto draw = [&g] {
    return rat(static_cast<long long>(g() % 61) - 30,
               static_cast<long long>(g() % 29) + 1);
  };
  for (int i = 0; i < 300; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    EXPECT_EQ(-(-a), a);
    if (!a.is_zero()) {
      EXPECT_EQ(a / a, Rational(1));
    }
    EXPECT_EQ(a < b, (b - a).sign() > 0);
  }
}

TEST(RationalTest, Helpers) {
  EXPECT_EQ(Abs(rat(-2, 3)), rat(2, 3));
  EXPECT_EQ(Min(rat(1, 3), rat(1, 2)), rat(1, 3));
  EXPECT_EQ(Max(rat(1, 3), rat(1, 2)), rat(1, 2));
  EXPECT_EQ(Sum({rat(1, 2), rat(1, 3), rat(1, 6)}), Rational(1));
  EXPECT_EQ(Dot({Rational(1), Rational(2)}, {rat(1, 2), rat(1, 4)}), Rational(1));
}

TEST(RationalTest, DecimalIsDisplayOnly) {
  EXPECT_EQ(ToDecimal(rat(253, 800)), "3.1625000000000000000e-01");
  EXPECT_EQ(ToDecimal(Rational(0)), "0.0000000000000000000e+00");
  EXPECT_EQ(ToDecimal(rat(-1, 3), 3), "-3.33e-01");
  // 12^-39 is far below double precision but renders exactly.
  EXPECT_EQ(ToDecimal(PowInt(Rational(12), -39), 5), "8.1645e-43");
}

}  // namespace
}  // namespace contracts
