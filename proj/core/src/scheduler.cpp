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

#include "ndtlab/scheduler.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ndtlab {

std::string SymbolId::str() const {
  return std::to_string(file) + "/" + share_set.str() + "/" + std::to_string(copy);
}

Placement::Placement(int N, int M, int cache_level, int copies)
    : files_(N), relays_(M), cache_level_(cache_level), copies_(copies), share_sets_(k_subsets(M, cache_level)) {
  cached_.resize(static_cast<std::size_t>(M));
  for (std::size_t i = 0; i < share_sets_.size(); ++i) {
    for (int rn : share_sets_[i].elements()) cached_[static_cast<std::size_t>(rn - 1)].push_back(i);
  }
}

const std::vector<std::size_t>& Placement::cached_share_sets(int rn) const {
  return cached_.at(static_cast<std::size_t>(rn - 1));
}

BigInt Placement::symbols_per_file() const { return BigInt(copies_) * BigInt(share_sets_.size()); }

BigInt Placement::cached_per_file(int rn) const { return BigInt(copies_) * BigInt(cached_share_sets(rn).size()); }

bool Placement::caches(int rn, const SymbolId& symbol) const {
  if (rn < 1 || rn > relays_ || symbol.file < 1 || symbol.file > files_) return false;
  if (symbol.copy < 1 || symbol.copy > copies_) return false;
  auto it = std::lower_bound(share_sets_.begin(), share_sets_.end(), symbol.share_set);
  if (it == share_sets_.end() || *it != symbol.share_set) return false;
  const auto index = static_cast<std::size_t>(it - share_sets_.begin());
  const auto& held = cached_share_sets(rn);
  return std::binary_search(held.begin(), held.end(), index);
}

void Placement::evict(int rn, std::size_t share_set_index) {
  auto& held = cached_.at(static_cast<std::size_t>(rn - 1));
  held.erase(std::remove(held.begin(), held.end(), share_set_index), held.end());
}

namespace {

int ue_group_size(int K, int level) { return std::min(K, level); }

int copies_for(int K, int level) { return binom(K, ue_group_size(K, level)).convert_to<int>(); }

}  // namespace

Placement build_placement(const CornerConfig& config) {
  const int level = config.cache_level();
  if (binom(config.K(), ue_group_size(config.K(), level)) * binom(config.M(), level) > kMaxPhase1Slots) {
    throw std::length_error("placement too large to materialise");
  }
  return Placement(config.base().N, config.M(), level, copies_for(config.K(), level));
}

Rational Schedule::phase1_uses() const { return Rational(static_cast<std::int64_t>(phase1.size() + unicast.size())); }

Rational Schedule::ndt() const { return (phase1_uses() + phase2_uses) / symbols_per_file; }

Schedule build_schedule(const CornerConfig& config, const DemandVector& demand) {
  const NetworkConfig& c = config.base();
  check_demand(demand, c);

  const int K = c.K;
  const int M = c.M;
  const int level = config.cache_level();
  const Rational& alpha = c.alpha;

  Schedule s;
  s.config = c;
  s.demand = demand;
  s.ue_group_size = ue_group_size(K, level);
  s.private_group_size = std::min(K, 1 + level);
  s.phase2_dof.assign(static_cast<std::size_t>(K), Rational(0));

  if (level == 0) {
    // One full-rate channel use per request.
    s.placement = Placement(c.N, M, 0, 1);
    s.symbols_per_file = Rational(1);
    for (int rn = 1; rn <= M; ++rn) s.unicast.push_back({UnicastSlot::Target::Relay, rn, demand.rn_demand(rn)});
    for (int ue = 1; ue <= K; ++ue) s.unicast.push_back({UnicastSlot::Target::User, ue, demand.ue_demand(ue)});
    s.phase1_ue_dof = Rational(0);
    s.phase2_uses = Rational(0);
    return s;
  }

  const BigInt slots = binom(K, s.ue_group_size) * binom(M, level + 1);
  if (slots > kMaxPhase1Slots) {
    throw std::length_error("schedule needs " + slots.str() + " phase-one slots, above the limit of " +
                            std::to_string(kMaxPhase1Slots));
  }

  s.placement = build_placement(config);
  s.symbols_per_file = Rational(s.placement.symbols_per_file());

  // Copy j of every share set travels in the slots paired with the j-th
  // user group, so each user is served C(K-1, psi-1) times per relay group.
  const std::vector<IndexSet> ue_groups = k_subsets(K, s.ue_group_size);
  for (const IndexSet& rn_group : k_subsets(M, level + 1)) {
    for (std::size_t j = 0; j < ue_groups.size(); ++j) {
      Phase1Slot slot;
      slot.rn_group = rn_group;
      slot.ue_group = ue_groups[j];
      slot.ue_dof = alpha;
      for (int rn : rn_group.elements()) {
        slot.delivered.push_back({rn, SymbolId{demand.rn_demand(rn), rn_group.without(rn), static_cast<int>(j + 1)}});
      }
      s.phase1.push_back(std::move(slot));
    }
  }

  s.phase1_ue_dof = Rational(binom(M, level + 1) * binom(K - 1, s.ue_group_size - 1)) * alpha;

  const Rational remaining = s.symbols_per_file - std::min(s.phase1_ue_dof, s.symbols_per_file);
  const Rational per_use = Rational(1) + Rational(std::min(K - 1, level)) * alpha;
  s.phase2_uses = Rational(K) * remaining / per_use;

  // Rotation round: use i carries the common symbol of user i and private
  // symbols for the psi' users starting at i, cyclically.
  for (int i = 0; i < K; ++i) {
    Phase2Slot slot;
    for (int j = 0; j < s.private_group_size; ++j) slot.private_ues = slot.private_ues.with((i + j) % K + 1);
    slot.private_dof = alpha;
    slot.common_ue = i + 1;
    slot.common_dof = Rational(1) - alpha;
    s.phase2_pattern.push_back(slot);
  }
  const Rational rounds = s.phase2_uses / Rational(K);
  for (const auto& slot : s.phase2_pattern) {
    for (int ue : slot.private_ues.elements()) s.phase2_dof[static_cast<std::size_t>(ue - 1)] += rounds * slot.private_dof;
    s.phase2_dof[static_cast<std::size_t>(slot.common_ue - 1)] += rounds * slot.common_dof;
  }
  return s;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MissingRnSymbol: return "missing-rn-symbol";
    case ViolationKind::DuplicateRnSymbol: return "duplicate-rn-symbol";
    case ViolationKind::UnexpectedRnSymbol: return "unexpected-rn-symbol";
    case ViolationKind::ZeroForcing: return "zero-forcing";
    case ViolationKind::SlotShape: return "slot-shape";
    case ViolationKind::CacheRatio: return "cache-ratio";
    case ViolationKind::UeDof: return "ue-dof";
    case ViolationKind::Phase2Identity: return "phase2-identity";
  }
  return "unknown";
}

ScheduleReport verify_schedule(const Schedule& schedule, const CornerConfig& config) {
  ScheduleReport r;
  const NetworkConfig& c = config.base();
  const int K = c.K;
  const int M = c.M;
  const int level = config.cache_level();
  const Rational& alpha = c.alpha;
  const Placement& placement = schedule.placement;

  auto fail = [&r](ViolationKind kind, std::string detail, std::optional<std::size_t> slot = std::nullopt,
                   std::optional<SymbolId> symbol = std::nullopt) {
    r.violations.push_back({kind, std::move(detail), slot, symbol});
  };

  if (schedule.config != c) fail(ViolationKind::SlotShape, "schedule was built for a different configuration");
  if (schedule.demand.files.size() != static_cast<std::size_t>(K + M)) {
    fail(ViolationKind::SlotShape, "demand vector length differs from K+M");
    r.rn_complete = r.ue_complete = false;
    return r;
  }

  // Expected file split, from the configuration alone.
  const int psi = std::min(K, level);
  const BigInt copies = binom(K, psi);
  const BigInt expected_symbols = level == 0 ? BigInt(1) : copies * binom(M, level);
  r.symbols_per_file = Rational(expected_symbols);
  if (placement.relays() != M || BigInt(placement.copies()) != (level == 0 ? BigInt(1) : copies) ||
      placement.symbols_per_file() != expected_symbols) {
    fail(ViolationKind::SlotShape, "placement split is not Gamma * C(M, mu M) symbols per file");
  }

  // Cache ratio: each relay must hold exactly the share sets it belongs to.
  std::optional<Rational> common_ratio;
  for (int rn = 1; rn <= M && placement.relays() == M; ++rn) {
    std::size_t members = 0;
    for (const auto& set : placement.share_sets()) members += set.contains(rn) ? 1 : 0;
    const auto& held = placement.cached_share_sets(rn);
    bool consistent = held.size() == members;
    for (std::size_t idx : held) consistent = consistent && placement.share_sets().at(idx).contains(rn);
    const Rational ratio = placement.share_sets().empty()
                               ? Rational(0)
                               : Rational(static_cast<std::int64_t>(held.size()),
                                          static_cast<std::int64_t>(placement.share_sets().size()));
    if (!consistent || ratio != c.mu) {
      r.cache_ratio_ok = false;
      fail(ViolationKind::CacheRatio,
           "RN" + std::to_string(rn) + " caches fraction " + ratio.str() + ", expected " + c.mu.str());
    }
    if (!common_ratio) common_ratio = ratio;
  }
  r.cache_ratio = common_ratio.value_or(Rational(0));

  // Relay coverage. Everything a relay is handed must be an uncached symbol
  // of its own file, and each such symbol must arrive exactly once.
  std::vector<std::map<SymbolId, int>> received(static_cast<std::size_t>(M));
  auto receive = [&](int rn, const SymbolId& symbol, std::optional<std::size_t> slot) {
    if (rn < 1 || rn > M) {
      fail(ViolationKind::UnexpectedRnSymbol, "symbol delivered to nonexistent RN" + std::to_string(rn), slot, symbol);
      return;
    }
    if (symbol.file != schedule.demand.rn_demand(rn) || placement.caches(rn, symbol)) {
      fail(ViolationKind::UnexpectedRnSymbol, "RN" + std::to_string(rn) + " does not need " + symbol.str(), slot,
           symbol);
    }
    ++received[static_cast<std::size_t>(rn - 1)][symbol];
  };

  std::vector<Rational> unicast_ue(static_cast<std::size_t>(K), Rational(0));
  for (const auto& u : schedule.unicast) {
    if (u.target == UnicastSlot::Target::Relay) {
      receive(u.node, SymbolId{u.file, IndexSet{}, 1}, std::nullopt);
    } else if (u.node >= 1 && u.node <= K) {
      unicast_ue[static_cast<std::size_t>(u.node - 1)] += Rational(1);
    }
  }

  r.phase1_offered.assign(static_cast<std::size_t>(K), Rational(0));
  for (std::size_t i = 0; i < schedule.phase1.size(); ++i) {
    const Phase1Slot& slot = schedule.phase1[i];
    const std::size_t number = i + 1;
    if (slot.rn_group.size() != level + 1 || slot.ue_group.size() != psi || !slot.rn_group.is_subset_of(IndexSet::range(M)) ||
        !slot.ue_group.is_subset_of(IndexSet::range(K))) {
      fail(ViolationKind::SlotShape, "slot groups have the wrong size or members", number);
    }
    if (slot.delivered.size() != static_cast<std::size_t>(slot.rn_group.size())) {
      fail(ViolationKind::SlotShape, "slot must carry one symbol per relay in its group", number);
    }
    for (const auto& d : slot.delivered) {
      receive(d.rn, d.symbol, number);
      // The interfering copy of d.symbol is nulled by the relays that cache
      // it, so the holders must be exactly the rest of the group, all of them
      // must have it, and there must be enough of them for the user group.
      const IndexSet others = slot.rn_group.contains(d.rn) ? slot.rn_group.without(d.rn) : slot.rn_group;
      bool feasible = slot.rn_group.contains(d.rn) && d.symbol.share_set == others &&
                      d.symbol.share_set.size() >= slot.ue_group.size();
      for (int holder : d.symbol.share_set.elements()) feasible = feasible && placement.caches(holder, d.symbol);
      if (!feasible) {
        r.zf_feasible = false;
        fail(ViolationKind::ZeroForcing,
             "symbol " + d.symbol.str() + " for RN" + std::to_string(d.rn) + " cannot be zero-forced by " +
                 others.str(),
             number, d.symbol);
      }
    }
    for (int ue : slot.ue_group.elements()) {
      if (ue >= 1 && ue <= K) r.phase1_offered[static_cast<std::size_t>(ue - 1)] += slot.ue_dof;
    }
  }

  for (int rn = 1; rn <= M; ++rn) {
    const auto& got = received[static_cast<std::size_t>(rn - 1)];
    for (const auto& [symbol, count] : got) {
      if (count > 1) {
        r.rn_complete = false;
        fail(ViolationKind::DuplicateRnSymbol,
             "RN" + std::to_string(rn) + " received " + symbol.str() + " " + std::to_string(count) + " times",
             std::nullopt, symbol);
      }
    }
    const int file = schedule.demand.rn_demand(rn);
    for (const auto& set : placement.share_sets()) {
      for (int j = 1; j <= placement.copies(); ++j) {
        SymbolId need{file, set, j};
        if (!placement.caches(rn, need) && !got.contains(need)) {
          r.rn_complete = false;
          fail(ViolationKind::MissingRnSymbol, "RN" + std::to_string(rn) + " never receives " + need.str(),
               std::nullopt, need);
        }
      }
    }
  }

  // Phase two: per-use identity and conservation of the DoF ledger.
  const Rational per_use = Rational(1) + Rational(std::min(K - 1, level)) * alpha;
  const int psi_prime = std::min(K, 1 + level);
  std::vector<Rational> pattern_dof(static_cast<std::size_t>(K), Rational(0));
  for (std::size_t i = 0; i < schedule.phase2_pattern.size(); ++i) {
    const Phase2Slot& slot = schedule.phase2_pattern[i];
    const Rational total = Rational(slot.private_ues.size()) * slot.private_dof + slot.common_dof;
    if (slot.private_ues.size() != psi_prime || slot.private_dof != alpha || slot.common_dof != Rational(1) - alpha ||
        total != per_use || slot.common_ue < 1 || slot.common_ue > K ||
        !slot.private_ues.is_subset_of(IndexSet::range(K)) || psi_prime - 1 > level) {
      r.phase2_ok = false;
      fail(ViolationKind::Phase2Identity, "phase-two use " + std::to_string(i + 1) + " carries " + total.str() +
                                              " DoF, expected " + per_use.str());
      continue;
    }
    for (int ue : slot.private_ues.elements()) pattern_dof[static_cast<std::size_t>(ue - 1)] += slot.private_dof;
    pattern_dof[static_cast<std::size_t>(slot.common_ue - 1)] += slot.common_dof;
  }
  std::vector<Rational> phase2(static_cast<std::size_t>(K), Rational(0));
  if (!schedule.phase2_pattern.empty()) {
    const Rational rounds = schedule.phase2_uses / Rational(static_cast<std::int64_t>(schedule.phase2_pattern.size()));
    for (std::size_t k = 0; k < phase2.size(); ++k) phase2[k] = rounds * pattern_dof[k];
  } else if (schedule.phase2_uses != Rational(0)) {
    r.phase2_ok = false;
    fail(ViolationKind::Phase2Identity, "phase two has channel uses but no slot pattern");
  }
  Rational phase2_sum(0);
  for (const auto& v : phase2) phase2_sum += v;
  if (phase2_sum != schedule.phase2_uses * per_use && !schedule.phase2_pattern.empty()) {
    r.phase2_ok = false;
    fail(ViolationKind::Phase2Identity, "phase-two DoF " + phase2_sum.str() + " differs from T2 * per-use DoF " +
                                            (schedule.phase2_uses * per_use).str());
  }
  if (schedule.phase2_dof.size() != static_cast<std::size_t>(K) ||
      !std::equal(phase2.begin(), phase2.end(), schedule.phase2_dof.begin())) {
    r.phase2_ok = false;
    fail(ViolationKind::Phase2Identity, "stored phase-two ledger disagrees with the slot pattern");
  }

  // Users: phase-one DoF beyond the file size is surplus, not progress.
  const Rational file_symbols = r.symbols_per_file;
  r.ue_dof.assign(static_cast<std::size_t>(K), Rational(0));
  for (int k = 0; k < K; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    Rational useful = std::min(r.phase1_offered[idx], file_symbols) + phase2[idx] + unicast_ue[idx];
    r.ue_dof[idx] = useful;
    if (useful != file_symbols) {
      r.ue_complete = false;
      fail(ViolationKind::UeDof, "UE" + std::to_string(k + 1) + " accumulates " + useful.str() + " DoF, needs " +
                                     file_symbols.str());
    }
  }

  r.phase1_uses = Rational(static_cast<std::int64_t>(schedule.phase1.size() + schedule.unicast.size()));
  r.phase2_uses = schedule.phase2_uses;
  r.ndt = (r.phase1_uses + r.phase2_uses) / file_symbols;
  return r;
}

Rational schedule_ndt(const CornerConfig& config) {
  return build_schedule(config, worst_case_demand(config.base())).ndt();
}

}  // namespace ndtlab
