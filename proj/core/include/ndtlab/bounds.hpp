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

#ifndef NDTLAB_BOUNDS_HPP
#define NDTLAB_BOUNDS_HPP

#include <optional>
#include <vector>

#include "ndtlab/network.hpp"
#include "ndtlab/rational.hpp"

namespace ndtlab {

/// Cache-only multicast delivery time M(1-mu)/(1+mu M), for any mu in [0,1].
Rational man_ndt(int M, const Rational& mu);

/// Same quantity restricted to corner configurations.
Rational ndt_man(const CornerConfig& config);

/// One term of the perfect-CSI converse, indexed by (ell, s) with
/// s in [1 : min{M+1, K}] and ell in [M+1-s : M]. Throws std::out_of_range
/// outside that grid.
Rational lower_bound_component(const Rational& mu, int ell, int s, int K, int M);

struct LowerBoundWitness {
  Rational value;         // max{1, inner_max}
  Rational inner_max;     // best component over the (ell, s) grid
  int argmax_ell = 0;
  int argmax_s = 0;
  bool floor_active = false;  // inner_max < 1, the constant floor decides
};

/// Maximises the converse over the admissible (ell, s) grid. Ties go to the
/// smallest s, then the smallest ell. The bound is derived for alpha = 1 and
/// holds for every alpha since delivery time cannot improve with worse CSI.
LowerBoundWitness ndt_lower_bound(const NetworkConfig& config);

enum class LimitingChannel { Broadcast, Interference };

const char* to_string(LimitingChannel channel);

struct NdtBreakdown {
  Rational man_term;
  Rational interference_term;
  Rational value;
  LimitingChannel limiting_channel = LimitingChannel::Broadcast;
};

/// Achievable one-shot delivery time at a corner cache size, split into its
/// broadcast and interference terms. At mu = 0 the value is pure unicast, K+M.
NdtBreakdown ndt_one_shot(const CornerConfig& config);

struct EnvelopePoint {
  Rational mu;
  Rational ndt;
  friend bool operator==(const EnvelopePoint&, const EnvelopePoint&) = default;
};

/// Lower convex envelope of the M+1 one-shot corner points for fixed K, M, alpha.
class AchievableEnvelope {
 public:
  AchievableEnvelope(int K, int M, const Rational& alpha);

  /// All corner points, mu = 0, 1/M, ..., 1.
  const std::vector<EnvelopePoint>& corners() const { return corners_; }
  /// The subset of corners on the lower hull, in increasing mu.
  const std::vector<EnvelopePoint>& vertices() const { return vertices_; }

  /// Piecewise-linear evaluation; throws ConfigError for mu outside [0,1].
  Rational operator()(const Rational& mu) const;

 private:
  std::vector<EnvelopePoint> corners_;
  std::vector<EnvelopePoint> vertices_;
};

Rational ndt_envelope(int K, int M, const Rational& alpha, const Rational& mu_query);

/// Full-cache converse under imperfect CSI, K / (1 + max{K-1, M} alpha).
Rational full_cache_lower_bound(int K, int M, const Rational& alpha);

/// Strongest lower bound available at this config: the constant 1, the
/// (ell, s) converse, and the full-cache bound when mu = 1.
Rational best_lower_bound(const NetworkConfig& config);

struct OptimalityReport {
  Rational lower;
  Rational upper;
  Rational gap;
  bool optimal = false;
  LowerBoundWitness converse;
  std::optional<Rational> full_cache_bound;
  bool converse_assumes_perfect_csi = false;  // converse applied at alpha < 1
};

OptimalityReport optimality_report(const CornerConfig& config);
/// Same at any mu in [0,1]; the upper bound is the envelope value there.
OptimalityReport optimality_report(const NetworkConfig& config);

}  // namespace ndtlab

#endif  // NDTLAB_BOUNDS_HPP
