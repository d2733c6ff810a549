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

#ifndef NDTLAB_REGIONS_HPP
#define NDTLAB_REGIONS_HPP

#include <string>
#include <vector>

#include "ndtlab/network.hpp"
#include "ndtlab/rational.hpp"

namespace ndtlab {

// Perfect-CSI operating regions of the one-shot scheme in the (mu, K, M) space.

enum class Region { A, B, C, D, E, Unclassified };

enum class NdtFormula {
  One,                  // region A, optimal
  Man,                  // regions B and E, broadcast limited
  InterferenceLimited,  // regions C and D, (K + man) / (1 + mu M)
  None,                 // unclassified
};

struct RegionLabel {
  Region region = Region::Unclassified;
  NdtFormula formula = NdtFormula::None;

  friend bool operator==(const RegionLabel&, const RegionLabel&) = default;
};

RegionLabel label_for(Region region);

const char* to_string(Region region);

/// Tests the defining rows in the order A (mu <= 1/2), A (mu > 1/2), B, E, C,
/// D and returns the first match. Requires mu in [0,1], K >= 1, M >= 1.
RegionLabel classify(const Rational& mu, int K, int M);

/// Achievable delivery time attached to a labelled region; uses the
/// continuous broadcast formula so it is defined off the corner grid too.
/// Throws std::invalid_argument for Unclassified.
Rational region_ndt(const RegionLabel& label, const Rational& mu, int K, int M);
Rational region_ndt(const RegionLabel& label, const NetworkConfig& config);

/// A named analytic border, sampled on the map's mu grid. Samples where the
/// curve is undefined (division by zero, mu outside its domain) are omitted.
struct BoundaryCurve {
  std::string name;
  std::vector<std::pair<Rational, double>> points;  // (mu, M)
};

struct RegionMap {
  int K = 1;
  std::vector<Rational> mu_grid;
  int m_min = 1;
  int m_max = 1;
  std::vector<RegionLabel> cells;  // row-major: mu index major, M minor
  std::vector<BoundaryCurve> boundaries;

  int m_count() const { return m_max - m_min + 1; }
  const RegionLabel& at(std::size_t mu_index, int M) const {
    return cells.at(mu_index * static_cast<std::size_t>(m_count()) + static_cast<std::size_t>(M - m_min));
  }
};

/// Curve names emitted in RegionMap::boundaries.
inline constexpr const char* kStandaloneFrontier = "rn_standalone_frontier";  // mu M = K
inline constexpr const char* kBorderAB = "border_a_b";                        // M = 1/(1-2mu)
inline constexpr const char* kBorderED = "border_e_d";                        // K = mu M man(mu)

/// Classifies every (mu, M) cell for mu = 0, step, 2 step, ... <= 1 and
/// M in [1 : m_max]. Throws std::invalid_argument on step <= 0, m_max < 1
/// or K < 1.
RegionMap region_map(int K, const Rational& mu_step, int m_max);

}  // namespace ndtlab

#endif  // NDTLAB_REGIONS_HPP
