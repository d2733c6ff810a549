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

#include <algorithm>
#include <random>
#include <sstream>

#include "ndtlab/bounds.hpp"
#include "ndtlab/scheduler.hpp"
#include "oracles.hpp"

using namespace ndtlab;
using oracle::from;
using oracle::Q;

namespace {

CornerConfig corner(int K, int M, Rational mu, Rational alpha) { return CornerConfig(make_config(K, M, mu, alpha)); }

Schedule worst_case(const CornerConfig& c) { return build_schedule(c, worst_case_demand(c.base())); }

bool has_violation(const ScheduleReport& r, ViolationKind kind) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST(Placement, WorkedCounts) {
  const Placement a = build_placement(corner(2, 4, Rational(1, 2), 1));
  EXPECT_EQ(a.share_sets().size(), 6u);
  EXPECT_EQ(a.copies(), 1);
  EXPECT_EQ(a.symbols_per_file(), BigInt(6));
  for (int rn = 1; rn <= 4; ++rn) EXPECT_EQ(a.cached_per_file(rn), BigInt(3));

  const Placement b = build_placement(corner(3, 2, Rational(1), 1));
  for (int rn = 1; rn <= 2; ++rn) EXPECT_EQ(b.cached_per_file(rn), b.symbols_per_file());

  const Placement c = build_placement(corner(3, 3, Rational(1, 3), 1));
  EXPECT_EQ(c.copies(), 3);
  EXPECT_EQ(c.symbols_per_file(), BigInt(9));
  for (int rn = 1; rn <= 3; ++rn) EXPECT_EQ(c.cached_per_file(rn), BigInt(3));

  EXPECT_THROW(build_placement(CornerConfig(make_config(2, 4, Rational(1, 3), 1))), ConfigError);
}

TEST(Placement, CountsMatchBinomialIdentities) {
  for (int K = 1; K <= 6; ++K) {
    for (int M = 1; M <= 6; ++M) {
      for (int t = 1; t <= M; ++t) {
        const Placement p = build_placement(corner(K, M, Rational(t, M), 1));
        const auto counts = oracle::schedule_counts(K, M, t, 1);
        EXPECT_EQ(p.symbols_per_file(), counts.L_prime);
        EXPECT_TRUE(std::is_sorted(p.share_sets().begin(), p.share_sets().end()));
        for (int rn = 1; rn <= M; ++rn) {
          EXPECT_EQ(p.cached_per_file(rn), counts.gamma * oracle::choose(M - 1, t - 1));
          // Cache ratio is exactly mu.
          EXPECT_EQ(Q(p.cached_per_file(rn)) / Q(p.symbols_per_file()), oracle::q(t, M));
          for (std::size_t idx : p.cached_share_sets(rn)) EXPECT_TRUE(p.share_sets()[idx].contains(rn));
        }
      }
    }
  }
}

TEST(Schedule, WorkedCaseFullCsi) {
  const auto c = corner(2, 4, Rational(1, 2), 1);
  const Schedule s = worst_case(c);
  EXPECT_EQ(s.phase1.size(), 4u);
  EXPECT_EQ(s.symbols_per_file, Rational(6));
  EXPECT_EQ(s.phase1_ue_dof, Rational(4));
  EXPECT_EQ(s.phase2_uses, Rational(2));
  EXPECT_EQ(s.ndt(), Rational(1));
  EXPECT_EQ(s.ndt(), ndt_one_shot(c).value);
  const auto r = verify_schedule(s, c);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.ndt, Rational(1));
  EXPECT_EQ(r.cache_ratio, Rational(1, 2));
  for (const auto& d : r.ue_dof) EXPECT_EQ(d, Rational(6));
}

TEST(Schedule, WorkedCaseNoCsi) {
  const Schedule s = worst_case(corner(2, 4, Rational(1, 2), 0));
  EXPECT_EQ(s.phase1_ue_dof, Rational(0));
  EXPECT_EQ(s.phase2_uses, Rational(12));
  EXPECT_EQ(s.ndt(), Rational(8, 3));
}

TEST(Schedule, FullCacheDeliversNothingToRelays) {
  for (int K = 1; K <= 5; ++K) {
    for (int M = 1; M <= 5; ++M) {
      const Rational alpha(1, 2);
      const auto c = corner(K, M, 1, alpha);
      const Schedule s = worst_case(c);
      EXPECT_TRUE(s.phase1.empty());
      EXPECT_EQ(s.ndt(), Rational(K) / (Rational(1) + Rational(std::min(K - 1, M)) * alpha));
      EXPECT_TRUE(verify_schedule(s, c).passed());
    }
  }
}

TEST(Schedule, ZeroCacheIsUnicast) {
  const auto c = corner(3, 2, 0, Rational(1, 4));
  const Schedule s = worst_case(c);
  EXPECT_EQ(s.unicast.size(), 5u);
  EXPECT_TRUE(s.phase1.empty());
  EXPECT_EQ(s.ndt(), Rational(5));
  EXPECT_EQ(schedule_ndt(c), Rational(5));
  EXPECT_TRUE(verify_schedule(s, c).passed());
}

TEST(Schedule, OtherWorkedValues) {
  EXPECT_EQ(schedule_ndt(corner(3, 2, Rational(1, 2), Rational(1, 2))), Rational(7, 3));
  EXPECT_EQ(schedule_ndt(corner(1, 1, 1, 1)), Rational(1));
}

TEST(Schedule, CountsMatchOracleAndOneShot) {
  for (int K = 1; K <= 6; ++K) {
    for (int M = 1; M <= 6; ++M) {
      for (int t = 0; t <= M; ++t) {
        for (const Q& alpha : oracle::alpha_grid()) {
          const auto c = corner(K, M, Rational(t, M), oracle::to(alpha));
          const Schedule s = worst_case(c);
          const auto counts = oracle::schedule_counts(K, M, t, alpha);
          EXPECT_EQ(from(s.phase1_uses()), Q(counts.T1));
          EXPECT_EQ(from(s.phase2_uses), counts.T2);
          EXPECT_EQ(from(s.symbols_per_file), Q(counts.L_prime));
          EXPECT_EQ(from(s.phase1_ue_dof), counts.L_tilde);
          EXPECT_EQ(from(s.ndt()), counts.ndt);
          EXPECT_EQ(from(s.ndt()), oracle::one_shot(K, M, oracle::q(t, M), alpha));
        }
      }
    }
  }
}

TEST(Schedule, RejectsBadDemandAndOversizeConfigs) {
  const auto c = corner(2, 4, Rational(1, 2), 1);
  DemandVector d = worst_case_demand(c.base());
  d.files.pop_back();
  EXPECT_THROW(build_schedule(c, d), ConfigError);
  EXPECT_THROW(worst_case(corner(30, 30, Rational(1, 2), 1)), std::length_error);
}

TEST(Schedule, ArbitraryDemandStillVerifies) {
  NetworkConfig base = make_config(3, 4, Rational(1, 2), Rational(1, 2));
  base.N = 9;
  const CornerConfig c(base);
  DemandVector d{3, 4, {9, 9, 2, 5, 5, 1, 8}};
  const Schedule s = build_schedule(c, d);
  EXPECT_TRUE(verify_schedule(s, c).passed());
  EXPECT_EQ(s.ndt(), schedule_ndt(c));
}

TEST(Verify, DeletedSlotNamesTheMissingSymbols) {
  const auto c = corner(2, 4, Rational(1, 2), 1);
  Schedule s = worst_case(c);
  const Phase1Slot removed = s.phase1[1];
  s.phase1.erase(s.phase1.begin() + 1);
  const auto r = verify_schedule(s, c);
  EXPECT_FALSE(r.rn_complete);
  for (const auto& d : removed.delivered) {
    const bool named = std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) {
      return v.kind == ViolationKind::MissingRnSymbol && v.symbol == d.symbol;
    });
    EXPECT_TRUE(named) << d.symbol.str();
  }
}

TEST(Verify, MovedShareSetBreaksZeroForcing) {
  const auto c = corner(2, 4, Rational(1, 2), 1);
  Schedule s = worst_case(c);
  // RN1 in slot 1 gets the symbol shared by {3,4} instead of {2,3}.
  s.phase1[0].delivered[0].symbol.share_set = IndexSet{3, 4};
  const auto r = verify_schedule(s, c);
  EXPECT_FALSE(r.zf_feasible);
  const auto it = std::find_if(r.violations.begin(), r.violations.end(),
                               [](const Violation& v) { return v.kind == ViolationKind::ZeroForcing; });
  ASSERT_NE(it, r.violations.end());
  EXPECT_EQ(it->slot, std::optional<std::size_t>(1));
}

TEST(Verify, DuplicatedSlotAndEvictedCacheAreReported) {
  const auto c = corner(3, 4, Rational(1, 2), Rational(1, 2));
  Schedule dup = worst_case(c);
  dup.phase1.push_back(dup.phase1.front());
  const auto a = verify_schedule(dup, c);
  EXPECT_TRUE(has_violation(a, ViolationKind::DuplicateRnSymbol));

  Schedule evicted = worst_case(c);
  evicted.placement.evict(2, evicted.placement.cached_share_sets(2).front());
  const auto b = verify_schedule(evicted, c);
  EXPECT_FALSE(b.cache_ratio_ok);
  EXPECT_FALSE(b.passed());
}

TEST(Verify, TamperedPhaseTwoLedger) {
  const auto c = corner(3, 3, Rational(1, 3), Rational(1, 4));
  Schedule s = worst_case(c);
  s.phase2_dof[0] += Rational(1);
  EXPECT_TRUE(has_violation(verify_schedule(s, c), ViolationKind::Phase2Identity));

  Schedule fewer = worst_case(c);
  fewer.phase2_uses -= Rational(1);
  const auto r = verify_schedule(fewer, c);
  EXPECT_FALSE(r.passed());
}

TEST(Verify, MismatchedConfigIsReported) {
  const Schedule s = worst_case(corner(2, 4, Rational(1, 2), 1));
  EXPECT_FALSE(verify_schedule(s, corner(2, 4, Rational(1, 2), Rational(1, 2))).passed());
}

TEST(ScheduleText, WorkedCaseLayout) {
  std::ostringstream os;
  write_schedule(os, worst_case(corner(2, 4, Rational(1, 2), 1)));
  const std::string text = os.str();
  EXPECT_NE(text.find("# schema: 1\n"), std::string::npos);
  EXPECT_NE(text.find("P1 1 RN{1,2,3} UE{1,2} sym:3/{2,3}/1,4/{1,3}/1,5/{1,2}/1\n"), std::string::npos);
  EXPECT_NE(text.find("P2 UE2 dof 2/1\n"), std::string::npos);
}

TEST(ScheduleText, ParseInvertsFormat) {
  for (int K = 1; K <= 4; ++K) {
    for (int M = 1; M <= 4; ++M) {
      for (int t = 1; t < M; ++t) {
        const Schedule s = worst_case(corner(K, M, Rational(t, M), Rational(1, 2)));
        for (std::size_t i = 0; i < s.phase1.size(); ++i) {
          const std::string line = format_phase1_slot(i + 1, s.phase1[i]);
          const auto [n, slot] = parse_phase1_slot(line, Rational(1, 2));
          EXPECT_EQ(n, i + 1);
          EXPECT_EQ(slot, s.phase1[i]);
        }
      }
    }
  }
  for (const char* bad : {"", "P1 1 RN{1,2} UE{1}", "P2 1 RN{1,2} UE{1} sym:1/{2}/1,2/{1}/1",
                          "P1 x RN{1,2} UE{1} sym:1/{2}/1,2/{1}/1", "P1 1 RN{1,2} UE{1} sym:1/{2}/1",
                          "P1 1 RN{1,2} UE{1} sym:1/{2}/1,2/{1}/1 extra"}) {
    EXPECT_THROW(parse_phase1_slot(bad, Rational(1)), std::invalid_argument) << bad;
  }
}

TEST(ScheduleProperty, BuildsAreDeterministicAndTextIsBitExact) {
  for (int K = 1; K <= 4; ++K) {
    for (int M = 1; M <= 5; ++M) {
      for (int t = 0; t <= M; ++t) {
        const auto c = corner(K, M, Rational(t, M), Rational(1, 4));
        const Schedule a = worst_case(c);
        const Schedule b = worst_case(c);
        EXPECT_EQ(a, b);
        std::ostringstream ta, tb;
        write_schedule(ta, a);
        write_schedule(tb, b);
        EXPECT_EQ(ta.str(), tb.str());
      }
    }
  }
}

TEST(ScheduleProperty, ShuffledSlotsKeepTheNdtAndPassVerification) {
  std::mt19937_64 rng(3);
  for (int K = 1; K <= 5; ++K) {
    for (int M = 2; M <= 5; ++M) {
      for (int t = 1; t < M; ++t) {
        const auto c = corner(K, M, Rational(t, M), Rational(1, 2));
        Schedule s = worst_case(c);
        const Rational before = s.ndt();
        std::shuffle(s.phase1.begin(), s.phase1.end(), rng);
        std::shuffle(s.phase2_pattern.begin(), s.phase2_pattern.end(), rng);
        const auto r = verify_schedule(s, c);
        EXPECT_TRUE(r.passed());
        EXPECT_EQ(r.ndt, before);
      }
    }
  }
}
