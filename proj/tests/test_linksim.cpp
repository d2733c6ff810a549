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

#include <cmath>

#include "ndtlab/linksim.hpp"

using namespace ndtlab;

namespace {

double mean_error_power(const std::vector<cdouble>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return s / static_cast<double>(v.size());
}

SimulationSettings small_settings(const Rational& alpha, int trials) {
  SimulationSettings s;
  s.alpha = alpha;
  s.trials = trials;
  s.seed = 5;
  return s;
}

}  // namespace

TEST(Channels, ErrorVarianceFollowsCsiQuality) {
  EXPECT_DOUBLE_EQ(draw_channels(2, 4, Rational(1), 1e6, 1).error_variance, 1e-6);
  EXPECT_DOUBLE_EQ(draw_channels(2, 4, Rational(0), 1e6, 1).error_variance, 1.0);
  EXPECT_NEAR(draw_channels(2, 4, Rational(1, 2), 1e6, 1).error_variance, 1e-3, 1e-15);
}

TEST(Channels, TrueChannelIsEstimatePlusError) {
  const auto ch = draw_channels(3, 5, Rational(1, 4), 1e4, 9);
  ASSERT_EQ(ch.f.size(), 5u);
  ASSERT_EQ(ch.g.size(), 3u);
  ASSERT_EQ(ch.h.size(), 15u);
  for (std::size_t i = 0; i < ch.f.size(); ++i) EXPECT_EQ(ch.f[i], ch.f_hat[i] + ch.f_err[i]);
  for (std::size_t i = 0; i < ch.g.size(); ++i) EXPECT_EQ(ch.g[i], ch.g_hat[i] + ch.g_err[i]);
  for (std::size_t i = 0; i < ch.h.size(); ++i) EXPECT_EQ(ch.h[i], ch.h_hat[i] + ch.h_err[i]);
  EXPECT_EQ(ch.rn_ue(2, 4), ch.h[(2 - 1) * 5 + (4 - 1)]);
}

TEST(Channels, SampleMomentsMatchTheModel) {
  const auto ch = draw_channels(40, 50, Rational(1, 2), 1e2, 2);
  EXPECT_NEAR(mean_error_power(ch.h_hat), 1.0, 0.1);
  EXPECT_NEAR(mean_error_power(ch.h_err) / ch.error_variance, 1.0, 0.1);
}

TEST(Channels, SameSeedSameDraw) {
  const auto a = draw_channels(2, 3, Rational(1, 2), 1e5, 42);
  const auto b = draw_channels(2, 3, Rational(1, 2), 1e5, 42);
  const auto c = draw_channels(2, 3, Rational(1, 2), 1e5, 43);
  EXPECT_EQ(a.h, b.h);
  EXPECT_EQ(a.g_err, b.g_err);
  EXPECT_NE(a.h, c.h);
}

TEST(Channels, RejectsBadArguments) {
  EXPECT_THROW(draw_channels(2, 3, Rational(1), 1.0, 1), std::invalid_argument);
  EXPECT_THROW(draw_channels(0, 3, Rational(1), 10.0, 1), std::invalid_argument);
  EXPECT_THROW(draw_channels(2, 3, Rational(2), 10.0, 1), std::invalid_argument);
}

TEST(ZeroForcing, ResidualShrinksWithCsiQuality) {
  const double P = 1e8;
  double perfect = 0.0, none = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    perfect += zf_residual_power(draw_channels(2, 4, Rational(1), P, seed), IndexSet{1, 2}, IndexSet{1, 2})[0];
    none += zf_residual_power(draw_channels(2, 4, Rational(0), P, seed), IndexSet{1, 2}, IndexSet{1, 2})[0];
  }
  EXPECT_LT(perfect / 200, 10.0);
  EXPECT_GT(none / 200, P / 100);
}

TEST(ZeroForcing, DesiredSignalScalesWithPower) {
  const auto ch = draw_channels(2, 4, Rational(1), 1e6, 3);
  const double d = zf_desired_power(ch, 1, IndexSet{2}, IndexSet{1, 2});
  EXPECT_GT(d, 1e3);
  EXPECT_THROW(zf_desired_power(ch, 1, IndexSet{1, 2}, IndexSet{1, 2}), std::invalid_argument);
  EXPECT_THROW(zf_residual_power(ch, IndexSet{1, 2}, IndexSet{1}), std::invalid_argument);
  EXPECT_THROW(zf_residual_power(ch, IndexSet{3}, IndexSet{1}), std::invalid_argument);
}

TEST(RateSplitting, RatesAreFiniteAndNonNegative) {
  const auto ch = draw_channels(3, 4, Rational(1, 2), 1e6, 8);
  const auto r = rate_split_rates(ch, Rational(1, 2), IndexSet{1, 2, 3}, IndexSet{1, 2});
  ASSERT_EQ(r.private_rates.size(), 3u);
  EXPECT_GE(r.common, 0.0);
  EXPECT_TRUE(std::isfinite(r.common));
  for (double p : r.private_rates) EXPECT_GE(p, 0.0);
  EXPECT_THROW(rate_split_rates(ch, Rational(1, 2), IndexSet{}, IndexSet{1, 2}), std::invalid_argument);
}

TEST(Regression, RecoversAnExactLine) {
  const auto [slope, se] = regression_slope({1, 2, 3, 4}, {3, 5, 7, 9}, {0.1, 0.1, 0.1, 0.1});
  EXPECT_NEAR(slope, 2.0, 1e-12);
  // sum of ((x - 2.5) / 5)^2 * 0.01 = 0.01 * 5 / 25.
  EXPECT_NEAR(se, std::sqrt(0.002), 1e-12);
  EXPECT_THROW(regression_slope({1, 1, 1}, {1, 2, 3}, {0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(regression_slope({1}, {1}, {0}), std::invalid_argument);
}

TEST(Exponents, ExpectedSlopesAndTolerances) {
  const Rational a(1, 4);
  EXPECT_DOUBLE_EQ(expected_slope(Quantity::DesiredSignal, a), 1.0);
  EXPECT_DOUBLE_EQ(expected_slope(Quantity::ResidualInterference, a), 0.75);
  EXPECT_DOUBLE_EQ(expected_slope(Quantity::CommonRate, a), 0.75);
  EXPECT_DOUBLE_EQ(expected_slope(Quantity::PrivateRate, a), 0.25);
  EXPECT_DOUBLE_EQ(slope_tolerance(Quantity::DesiredSignal), 0.05);
  EXPECT_DOUBLE_EQ(slope_tolerance(Quantity::ResidualInterference), 0.1);
}

TEST(Exponents, SlopesNearPrediction) {
  for (const Rational& alpha : {Rational(0), Rational(1, 2), Rational(1)}) {
    for (const auto& e : estimate_exponents(small_settings(alpha, 1000))) {
      EXPECT_NEAR(e.slope, expected_slope(e.quantity, alpha), slope_tolerance(e.quantity))
          << to_string(e.quantity) << " alpha=" << alpha;
      EXPECT_TRUE(std::isfinite(e.slope));
      EXPECT_EQ(e.trials, 1000);
      EXPECT_EQ(e.levels.size(), 3u);
      EXPECT_TRUE(e.note.empty());
    }
  }
}

TEST(Exponents, ThreadCountDoesNotChangeResults) {
  SimulationSettings s = small_settings(Rational(1, 4), 301);
  const auto one = estimate_exponents(s);
  s.threads = 4;
  const auto four = estimate_exponents(s);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].levels, four[i].levels);
    EXPECT_EQ(one[i].slope, four[i].slope);
    EXPECT_EQ(one[i].std_error, four[i].std_error);
  }
}

TEST(Exponents, SingleTrialIsReportedNotFatal) {
  const auto estimates = estimate_exponents(small_settings(Rational(1, 2), 1));
  for (const auto& e : estimates) {
    EXPECT_TRUE(std::isfinite(e.slope));
    EXPECT_FALSE(e.note.empty());
  }
}

TEST(Exponents, RejectsBadSettings) {
  SimulationSettings s = small_settings(Rational(1, 2), 10);
  s.powers = {1e4, 1e6};
  EXPECT_THROW(estimate_exponents(s), std::invalid_argument);
  s.powers = {1e4, 1e8, 1e6};
  EXPECT_THROW(estimate_exponents(s), std::invalid_argument);
  s = small_settings(Rational(1, 2), 10);
  s.mu = Rational(0);
  EXPECT_THROW(estimate_exponents(s), std::invalid_argument);
  s.mu = Rational(1, 3);
  EXPECT_THROW(estimate_exponents(s), std::invalid_argument);
  s = small_settings(Rational(1, 2), 0);
  EXPECT_THROW(estimate_exponents(s), std::invalid_argument);
}

TEST(ExponentsProperty, ResidualAndDesiredSlopesAcrossSmallNetworks) {
  for (int K = 1; K <= 4; ++K) {
    for (int M = 1; M <= 4; ++M) {
      for (int t = 1; t <= M; ++t) {
        std::optional<double> previous;
        for (const Rational& alpha : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
          SimulationSettings s;
          s.K = K;
          s.M = M;
          s.mu = Rational(t, M);
          s.alpha = alpha;
          s.trials = 200;
          s.seed = static_cast<std::uint64_t>(100 * K + 10 * M + t);
          const auto e = estimate_exponents(s);
          const double residual = e[static_cast<int>(Quantity::ResidualInterference)].slope;
          EXPECT_NEAR(e[static_cast<int>(Quantity::DesiredSignal)].slope, 1.0, 0.05);
          EXPECT_NEAR(residual, 1.0 - alpha.to_double(), 0.1);
          if (previous) {
            EXPECT_LT(residual, *previous);
          }
          previous = residual;
        }
      }
    }
  }
}

TEST(ExponentsProperty, SameSeedGivesBitIdenticalMeans) {
  const auto a = estimate_exponents(small_settings(Rational(3, 4), 200));
  const auto b = estimate_exponents(small_settings(Rational(3, 4), 200));
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].levels, b[i].levels);
}
