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

#ifndef NDTLAB_SCHEDULER_HPP
#define NDTLAB_SCHEDULER_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ndtlab/combinatorics.hpp"
#include "ndtlab/network.hpp"
#include "ndtlab/rational.hpp"

namespace ndtlab {

// Two-phase one-shot delivery at corner cache sizes.
//
// Every file is split into L' = Gamma * C(M, t) symbols, t = mu M, each
// labelled by the t-subset of relays that caches it and a copy index in
// [1:Gamma], Gamma = C(K, psi), psi = min{K, t}. Phase one runs coded
// multicast to relay groups of size t+1 while the cache holders partially
// zero-force the multicast at psi users and feed them alpha DoF each. Phase
// two finishes the users with rate-split private (alpha) and common
// (1 - alpha) symbols. At mu = 0 everything is unicast.

struct SymbolId {
  int file = 0;
  IndexSet share_set;
  int copy = 0;

  /// `<file>/<set>/<copy>`, e.g. `3/{2,4}/1`.
  std::string str() const;

  friend bool operator==(const SymbolId&, const SymbolId&) = default;
  friend std::strong_ordering operator<=>(const SymbolId&, const SymbolId&) = default;
};

class Placement {
 public:
  Placement() = default;
  Placement(int N, int M, int cache_level, int copies);

  int files() const { return files_; }
  int relays() const { return relays_; }
  int cache_level() const { return cache_level_; }
  int copies() const { return copies_; }
  /// Every share set of size mu M, in lexicographic order.
  const std::vector<IndexSet>& share_sets() const { return share_sets_; }
  /// Indices into share_sets() held by relay `rn` (1-based).
  const std::vector<std::size_t>& cached_share_sets(int rn) const;

  /// L' = Gamma * C(M, mu M).
  BigInt symbols_per_file() const;
  BigInt cached_per_file(int rn) const;
  bool caches(int rn, const SymbolId& symbol) const;

  /// Drops a share set from one relay's cache; for building faulty placements in tests.
  void evict(int rn, std::size_t share_set_index);

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  int files_ = 0;
  int relays_ = 0;
  int cache_level_ = 0;
  int copies_ = 1;
  std::vector<IndexSet> share_sets_;
  std::vector<std::vector<std::size_t>> cached_;
};

Placement build_placement(const CornerConfig& config);

struct DeliveredSymbol {
  int rn = 0;
  SymbolId symbol;
  friend bool operator==(const DeliveredSymbol&, const DeliveredSymbol&) = default;
};

struct Phase1Slot {
  IndexSet rn_group;   // size 1 + mu M
  IndexSet ue_group;   // size psi
  std::vector<DeliveredSymbol> delivered;  // one per member of rn_group, in order
  Rational ue_dof;     // alpha per served user
  friend bool operator==(const Phase1Slot&, const Phase1Slot&) = default;
};

struct Phase2Slot {
  IndexSet private_ues;  // size psi' = min{K, 1 + mu M}
  Rational private_dof;  // alpha each
  int common_ue = 0;
  Rational common_dof;   // 1 - alpha
  friend bool operator==(const Phase2Slot&, const Phase2Slot&) = default;
};

/// Full-rate unicast channel use, only at mu = 0.
struct UnicastSlot {
  enum class Target { Relay, User };
  Target target = Target::Relay;
  int node = 0;
  int file = 0;
  friend bool operator==(const UnicastSlot&, const UnicastSlot&) = default;
};

struct Schedule {
  NetworkConfig config;
  DemandVector demand;
  Placement placement;
  int ue_group_size = 0;       // psi
  int private_group_size = 0;  // psi'
  std::vector<UnicastSlot> unicast;
  std::vector<Phase1Slot> phase1;
  /// One rotation round of phase two (K channel uses); the phase repeats it
  /// phase2_uses / K times, fractionally in the large-file limit.
  std::vector<Phase2Slot> phase2_pattern;
  Rational phase2_uses;          // T2
  std::vector<Rational> phase2_dof;  // per user, index k-1
  Rational symbols_per_file;     // L'
  Rational phase1_ue_dof;        // L~, offered to each user in phase one

  /// T1: phase-one slots, or the unicast slots at mu = 0.
  Rational phase1_uses() const;
  /// (T1 + T2) / L'.
  Rational ndt() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Upper limit on materialised phase-one slots.
inline constexpr std::size_t kMaxPhase1Slots = 5'000'000;

/// Throws ConfigError on a malformed demand and std::length_error when the
/// schedule would exceed kMaxPhase1Slots.
Schedule build_schedule(const CornerConfig& config, const DemandVector& demand);

enum class ViolationKind {
  MissingRnSymbol,
  DuplicateRnSymbol,
  UnexpectedRnSymbol,
  ZeroForcing,
  SlotShape,
  CacheRatio,
  UeDof,
  Phase2Identity,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
  std::optional<std::size_t> slot;  // 1-based phase-one slot number
  std::optional<SymbolId> symbol;
};

struct ScheduleReport {
  bool rn_complete = true;
  bool zf_feasible = true;
  bool ue_complete = true;
  bool cache_ratio_ok = true;
  bool phase2_ok = true;
  std::vector<Rational> ue_dof;      // useful DoF per user over both phases
  std::vector<Rational> phase1_offered;  // per user
  Rational cache_ratio;
  Rational symbols_per_file;
  Rational phase1_uses;
  Rational phase2_uses;
  Rational ndt;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

/// Recounts a schedule from its slots and placement, independently of the
/// builder: relay coverage, zero-forcing feasibility, user DoF, cache ratio
/// and the phase-two DoF identities. Problems are reported, never thrown.
ScheduleReport verify_schedule(const Schedule& schedule, const CornerConfig& config);

/// (T1 + T2) / L' of the worst-case schedule.
Rational schedule_ndt(const CornerConfig& config);

// Line-oriented text form: header comments, then `U`, `P1` and `P2` records.
void write_schedule(std::ostream& os, const Schedule& schedule);
std::string format_phase1_slot(std::size_t slot_number, const Phase1Slot& slot);
/// Inverse of format_phase1_slot; ue_dof is not part of the line and is set
/// to `ue_dof`. Throws std::invalid_argument on malformed input.
std::pair<std::size_t, Phase1Slot> parse_phase1_slot(const std::string& line, const Rational& ue_dof);

}  // namespace ndtlab

#endif  // NDTLAB_SCHEDULER_HPP
