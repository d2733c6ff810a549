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

#include "ndtlab/regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ndtlab/bounds.hpp"

namespace ndtlab {

RegionLabel label_for(Region region) {
  switch (region) {
    case Region::A: return {region, NdtFormula::One};
    case Region::B:
    case Region::E: return {region, NdtFormula::Man};
    case Region::C:
    case Region::D: return {region, NdtFormula::InterferenceLimited};
    case Region::Unclassified: break;
  }
  return {Region::Unclassified, NdtFormula::None};
}

const char* to_string(Region region) {
  switch (region) {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::C: return "C";
    case Region::D: return "D";
    case Region::E: return "E";
    case Region::Unclassified: break;
  }
  return "U";
}

namespace {

// Sign of M - 1/(1-2mu), with 1/(1-2mu) = +inf at mu = 1/2 and the finite
// negative value above 1/2. Compared through M(1-2mu) - 1 to stay exact.
int compare_with_ab_border(const Rational& mu, int M) {
  const Rational one_minus = Rational(1) - Rational(2) * mu;
  if (one_minus.is_zero()) return -1;
  if (one_minus.sign() < 0) return 1;
  const Rational lhs = Rational(M) * one_minus;
  if (lhs < Rational(1)) return -1;
  if (lhs > Rational(1)) return 1;
  return 0;
}

}  // namespace

RegionLabel classify(const Rational& mu, int K, int M) {
  const Rational half(1, 2);
  const Rational level = mu * Rational(M);  // mu M
  const Rational k(K);
  const Rational m(M);
  const int vs_border = compare_with_ab_border(mu, M);

  // A, mu <= 1/2:  K <= mu M < M < 1/(1-2mu)
  if (mu <= half && k <= level && level < m && vs_border < 0) return label_for(Region::A);
  // A, mu > 1/2:   K <= mu M <= M, M > 1/(1-2mu)
  if (mu > half && k <= level && level <= m && vs_border > 0) return label_for(Region::A);
  // B:             K <= mu M, 1/(1-2mu) <= M, mu <= 1/2
  if (mu <= half && k <= level && vs_border >= 0) return label_for(Region::B);

  const Rational man = man_ndt(M, mu);
  // E:             mu M < K <= mu M man <= M
  if (level < k && k <= level * man && level * man <= m) return label_for(Region::E);
  // C:             mu M < M < K
  if (level < m && m < k) return label_for(Region::C);
  // D:             mu M max{1, man} < K <= M
  if (level * std::max(Rational(1), man) < k && k <= m) return label_for(Region::D);
  return label_for(Region::Unclassified);
}

Rational region_ndt(const RegionLabel& label, const Rational& mu, int K, int M) {
  switch (label.formula) {
    case NdtFormula::One: return Rational(1);
    case NdtFormula::Man: return man_ndt(M, mu);
    case NdtFormula::InterferenceLimited:
      return (Rational(K) + man_ndt(M, mu)) / (Rational(1) + mu * Rational(M));
    case NdtFormula::None: break;
  }
  throw std::invalid_argument("region_ndt: unclassified triplet has no region formula");
}

Rational region_ndt(const RegionLabel& label, const NetworkConfig& config) {
  const NetworkConfig c = validate(config);
  return region_ndt(label, c.mu, c.K, c.M);
}

RegionMap region_map(int K, const Rational& mu_step, int m_max) {
  if (K < 1) throw std::invalid_argument("region_map: K must be positive");
  if (mu_step <= Rational(0)) throw std::invalid_argument("region_map: mu step must be positive");
  if (m_max < 1) throw std::invalid_argument("region_map: m_max must be at least 1");

  RegionMap map;
  map.K = K;
  map.m_min = 1;
  map.m_max = m_max;
  for (Rational mu(0); mu <= Rational(1); mu += mu_step) map.mu_grid.push_back(mu);

  map.cells.reserve(map.mu_grid.size() * static_cast<std::size_t>(map.m_count()));
  for (const auto& mu : map.mu_grid) {
    for (int M = map.m_min; M <= map.m_max; ++M) map.cells.push_back(classify(mu, K, M));
  }

  BoundaryCurve frontier{kStandaloneFrontier, {}};
  BoundaryCurve ab{kBorderAB, {}};
  BoundaryCurve ed{kBorderED, {}};
  const double k = K;
  for (const auto& mu_exact : map.mu_grid) {
    const double mu = mu_exact.to_double();
    if (mu > 0.0) frontier.points.emplace_back(mu_exact, k / mu);
    if (mu < 0.5) ab.points.emplace_back(mu_exact, 1.0 / (1.0 - 2.0 * mu));
    if (mu > 0.0 && mu < 1.0) {
      // Positive root of mu(1-mu) M^2 - K mu M - K = 0.
      const double a = mu * (1.0 - mu);
      const double b = k * mu;
      ed.points.emplace_back(mu_exact, (b + std::sqrt(b * b + 4.0 * a * k)) / (2.0 * a));
    }
  }
  map.boundaries = {std::move(frontier), std::move(ab), std::move(ed)};
  return map;
}

}  // namespace ndtlab
