// SPDX-License-Identifier: Apache-2.0
//
// ndtlab: delivery-time analysis for cache-aided broadcast-relay networks
// Copyright (C) 2026 The ndtlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ndtlab/rational.hpp"
#include "oracles.hpp"

using ndtlab::BigInt;
using ndtlab::Rational;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rational::parse("1/2"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-3/9"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("+2."), Rational(2));
  EXPECT_EQ(Rational::parse("0.3333"), Rational(3333, 10000));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "a", "1.2.3", "1/2/3", "1e3", "0x10", " 1", "1 ", "--1", "."}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, ZeroDenominatorAndDivisionThrow) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, CanonicalFormAndPrinting) {
  const Rational r(-6, -4);
  EXPECT_EQ(r.numerator(), BigInt(3));
  EXPECT_EQ(r.denominator(), BigInt(2));
  EXPECT_EQ(r.str(), "3/2");
  EXPECT_EQ(Rational(4).str(), "4");
  EXPECT_EQ(Rational(4).fraction_str(), "4/1");
  EXPECT_EQ(Rational(0).fraction_str(), "0/1");
  EXPECT_EQ(Rational(1, -3).str(), "-1/3");
  std::ostringstream os;
  os << Rational(7, 3);
  EXPECT_EQ(os.str(), "7/3");
}

TEST(Rational, ArithmeticAndOrdering) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(ndtlab::abs(Rational(-5, 7)), Rational(5, 7));
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_FALSE(Rational(3, 2).is_integer());
  EXPECT_EQ(Rational(-2, 7).sign(), -1);
  EXPECT_TRUE(Rational().is_zero());
  EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
}

TEST(Rational, LargeValuesStayExact) {
  BigInt big = 1;
  for (int i = 0; i < 40; ++i) big *= 10;
  const Rational r(big + 1, big);
  EXPECT_EQ((r - Rational(1)) * Rational(big), Rational(1));
  EXPECT_EQ(Rational::parse(r.str()), r);
}

TEST(RationalProperty, TextRoundTripAndFieldAxioms) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t d1 = dist(rng), d2 = dist(rng);
    if (d1 == 0) d1 = 1;
    if (d2 == 0) d2 = -1;
    const Rational a(dist(rng), d1);
    const Rational b(dist(rng), d2);
    EXPECT_EQ(Rational::parse(a.str()), a);
    EXPECT_EQ(Rational::parse(a.fraction_str()), a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_EQ(oracle::to(oracle::from(a) + oracle::from(b)), a + b);
    EXPECT_EQ(a < b, oracle::from(a) < oracle::from(b));
  }
}
