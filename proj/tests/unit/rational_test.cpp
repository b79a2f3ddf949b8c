// Copyright 2026 The negsssp Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "negsssp/rational.hpp"
#include "negsssp/rng.hpp"
#include "negsssp/weight.hpp"

namespace negsssp {
namespace {

TEST(RationalTest, ParsesIntegersDecimalsAndFractions) {
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::parse("-2.5").to_string(), "-5/2");
  EXPECT_EQ(Rational::parse("0.1").to_string(), "1/10");
  EXPECT_EQ(Rational::parse("1e-3").to_string(), "1/1000");
  EXPECT_EQ(Rational::parse("2.5E2"), Rational(250));
  EXPECT_EQ(Rational::parse("14/4").to_string(), "7/2");
  EXPECT_TRUE(Rational::parse("inf").is_inf());
}

TEST(RationalTest, RejectsGarbage) {
  for (const char* s : {"", "abc", "1/0", "1..2", "--1", "3x", "e5"}) {
    EXPECT_THROW(Rational::parse(s), std::invalid_argument) << s;
  }
}

TEST(RationalTest, InfinityArithmetic) {
  Rational inf = Rational::infinity();
  EXPECT_TRUE((inf + Rational(5)).is_inf());
  EXPECT_TRUE((Rational(-5) + inf).is_inf());
  EXPECT_GT(inf, Rational(1000000));
  EXPECT_EQ(inf, Rational::infinity());
  EXPECT_THROW(inf - inf, std::domain_error);
  EXPECT_THROW(-inf, std::domain_error);
  EXPECT_EQ(inf.to_string(), "inf");
}

TEST(RationalTest, OrderingMatchesDoubles) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    long a = rng.between(-1000, 1000), b = rng.between(1, 50);
    long c = rng.between(-1000, 1000), d = rng.between(1, 50);
    Rational x(mpq_class(a, b)), y(mpq_class(c, d));
    double dx = static_cast<double>(a) / b, dy = static_cast<double>(c) / d;
    if (a * d == c * b) {
      EXPECT_EQ(x, y);
    } else {
      EXPECT_EQ(x < y, dx < dy);
    }
  }
}

TEST(WeightTraitsTest, DoubleRoundTrip) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    double w = static_cast<double>(rng.between(-1000000, 1000000)) / 7.0;
    std::string s = WeightTraits<double>::to_string(w);
    EXPECT_EQ(WeightTraits<double>::parse(s), w) << s;
  }
  EXPECT_EQ(WeightTraits<double>::to_string(WeightTraits<double>::inf()), "inf");
  EXPECT_TRUE(WeightTraits<double>::is_inf(WeightTraits<double>::parse("inf")));
}

TEST(WeightTraitsTest, SlackIsZeroWhenExact) {
  EXPECT_EQ(WeightTraits<Rational>::slack(Rational(100)), Rational(0));
  EXPECT_DOUBLE_EQ(WeightTraits<double>::slack(std::ldexp(1.0, 32)), 1.0);
}

}  // namespace
}  // namespace negsssp
