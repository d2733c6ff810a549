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

#include "ndtlab/bounds.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace ndtlab {

Rational man_ndt(int M, const Rational& mu) {
  const Rational m(M);
  return m * (Rational(1) - mu) / (Rational(1) + mu * m);
}

Rational ndt_man(const CornerConfig& config) { return man_ndt(config.M(), config.mu()); }

Rational lower_bound_component(const Rational& mu, int ell, int s, int K, int M) {
  const int s_max = std::min(M + 1, K);
  const int s_bar = M + 1 - s;
  if (s < 1 || s > s_max || ell < s_bar || ell > M) {
    throw std::out_of_range("lower_bound_component: (ell=" + std::to_string(ell) + ", s=" + std::to_string(s) +
                            ") outside the admissible grid for K=" + std::to_string(K) +
                            ", M=" + std::to_string(M));
  }
  // s_bar (K - s + (s_bar - 1)/2) + ell (ell + 1)/2
  const Rational half(1, 2);
  Rational cached = Rational(s_bar) * (Rational(K - s) + Rational(s_bar - 1) * half) +
                    Rational(ell) * Rational(ell + 1) * half;
  return (Rational(K + ell) - mu * cached) / Rational(s);
}

LowerBoundWitness ndt_lower_bound(const NetworkConfig& config) {
  const NetworkConfig c = validate(config);
  LowerBoundWitness w;
  bool have = false;
  const int s_max = std::min(c.M + 1, c.K);
  for (int s = 1; s <= s_max; ++s) {
    for (int ell = c.M + 1 - s; ell <= c.M; ++ell) {
      Rational v = lower_bound_component(c.mu, ell, s, c.K, c.M);
      // Strict improvement only: the scan order already realises the
      // smallest-s-then-smallest-ell tie rule.
      if (!have || v > w.inner_max) {
        w.inner_max = v;
        w.argmax_ell = ell;
        w.argmax_s = s;
        have = true;
      }
    }
  }
  w.floor_active = w.inner_max < Rational(1);
  w.value = w.floor_active ? Rational(1) : w.inner_max;
  return w;
}

const char* to_string(LimitingChannel channel) {
  return channel == LimitingChannel::Broadcast ? "broadcast" : "interference";
}

NdtBreakdown ndt_one_shot(const CornerConfig& config) {
  const int K = config.K();
  const int M = config.M();
  const int level = config.cache_level();
  NdtBreakdown out;
  out.man_term = ndt_man(config);
  if (level == 0) {
    // Unicast every request; CSI quality plays no role.
    out.interference_term = Rational(K + M);
    out.value = out.interference_term;
    out.limiting_channel = out.man_term >= out.interference_term ? LimitingChannel::Broadcast
                                                                  : LimitingChannel::Interference;
    return out;
  }
  const Rational& alpha = config.alpha();
  const Rational indicator = K <= level ? Rational(1) : Rational(0);
  const Rational served(std::min(K - 1, level));
  out.interference_term =
      (Rational(K) + out.man_term * (Rational(1) - indicator * alpha)) / (Rational(1) + served * alpha);
  if (out.man_term >= out.interference_term) {
    out.value = out.man_term;
    out.limiting_channel = LimitingChannel::Broadcast;
  } else {
    out.value = out.interference_term;
    out.limiting_channel = LimitingChannel::Interference;
  }
  return out;
}

namespace {

// Orientation of (a, b, c); positive for a counter-clockwise turn.
Rational cross(const EnvelopePoint& a, const EnvelopePoint& b, const EnvelopePoint& c) {
  return (b.mu - a.mu) * (c.ndt - a.ndt) - (b.ndt - a.ndt) * (c.mu - a.mu);
}

}  // namespace

AchievableEnvelope::AchievableEnvelope(int K, int M, const Rational& alpha) {
  for (int c = 0; c <= M; ++c) {
    CornerConfig corner(make_config(K, M, Rational(c, M), alpha));
    corners_.push_back({corner.mu(), ndt_one_shot(corner).value});
  }
  for (const auto& p : corners_) {
    while (vertices_.size() >= 2 && cross(vertices_[vertices_.size() - 2], vertices_.back(), p) <= Rational(0)) {
      vertices_.pop_back();
    }
    vertices_.push_back(p);
  }
}

Rational AchievableEnvelope::operator()(const Rational& mu) const {
  if (mu < Rational(0) || mu > Rational(1)) {
    throw ConfigError(ConfigErrorKind::MuOutOfRange, "envelope query mu=" + mu.str() + " outside [0,1]");
  }
  auto hi = std::lower_bound(vertices_.begin(), vertices_.end(), mu,
                             [](const EnvelopePoint& p, const Rational& x) { return p.mu < x; });
  if (hi->mu == mu) return hi->ndt;
  auto lo = std::prev(hi);
  const Rational t = (mu - lo->mu) / (hi->mu - lo->mu);
  return lo->ndt + t * (hi->ndt - lo->ndt);
}

Rational ndt_envelope(int K, int M, const Rational& alpha, const Rational& mu_query) {
  return AchievableEnvelope(K, M, alpha)(mu_query);
}

Rational full_cache_lower_bound(int K, int M, const Rational& alpha) {
  return Rational(K) / (Rational(1) + Rational(std::max(K - 1, M)) * alpha);
}

Rational best_lower_bound(const NetworkConfig& config) {
  const NetworkConfig c = validate(config);
  Rational lower = ndt_lower_bound(c).value;
  if (c.mu == Rational(1)) lower = std::max(lower, full_cache_lower_bound(c.K, c.M, c.alpha));
  return lower;
}

OptimalityReport optimality_report(const CornerConfig& config) { return optimality_report(config.base()); }

OptimalityReport optimality_report(const NetworkConfig& config) {
  OptimalityReport r;
  const NetworkConfig c = validate(config);
  r.converse = ndt_lower_bound(c);
  r.converse_assumes_perfect_csi = c.alpha != Rational(1);
  r.lower = r.converse.value;
  if (c.mu == Rational(1)) {
    r.full_cache_bound = full_cache_lower_bound(c.K, c.M, c.alpha);
    r.lower = std::max(r.lower, *r.full_cache_bound);
  }
  r.upper = ndt_envelope(c.K, c.M, c.alpha, c.mu);
  r.gap = r.upper - r.lower;
  r.optimal = r.gap.is_zero();
  return r;
}

}  // namespace ndtlab
