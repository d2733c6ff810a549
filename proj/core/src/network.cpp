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

#include "ndtlab/network.hpp"

#include <set>

namespace ndtlab {

const char* to_string(ConfigErrorKind kind) {
  switch (kind) {
    case ConfigErrorKind::ZeroNodes: return "zero-nodes";
    case ConfigErrorKind::MuOutOfRange: return "mu-out-of-range";
    case ConfigErrorKind::AlphaOutOfRange: return "alpha-out-of-range";
    case ConfigErrorKind::LibraryTooSmall: return "library-too-small";
    case ConfigErrorKind::NonCornerMu: return "non-corner-mu";
    case ConfigErrorKind::DemandMismatch: return "demand-mismatch";
  }
  return "unknown";
}

NetworkConfig validate(const NetworkConfig& config) {
  if (config.K < 1 || config.M < 1) {
    throw ConfigError(ConfigErrorKind::ZeroNodes, "K and M must both be positive (got K=" + std::to_string(config.K) +
                                                      ", M=" + std::to_string(config.M) + ")");
  }
  if (config.mu < Rational(0) || config.mu > Rational(1)) {
    throw ConfigError(ConfigErrorKind::MuOutOfRange, "mu must lie in [0,1] (got " + config.mu.str() + ")");
  }
  if (config.alpha < Rational(0) || config.alpha > Rational(1)) {
    throw ConfigError(ConfigErrorKind::AlphaOutOfRange, "alpha must lie in [0,1] (got " + config.alpha.str() + ")");
  }
  if (config.N < config.K + config.M) {
    throw ConfigError(ConfigErrorKind::LibraryTooSmall, "library size N=" + std::to_string(config.N) +
                                                            " is smaller than K+M=" +
                                                            std::to_string(config.K + config.M));
  }
  return config;
}

NetworkConfig make_config(int K, int M, const Rational& mu, const Rational& alpha) {
  return NetworkConfig{K, M, K + M, mu, alpha};
}

std::string corner_hint(int M) {
  std::string out = "{";
  for (int c = 0; c <= M; ++c) {
    if (c > 0) out += ',';
    out += Rational(c, M).str();
  }
  return out + "}";
}

CornerConfig::CornerConfig(const NetworkConfig& config) : base_(validate(config)) {
  Rational level = config.mu * Rational(config.M);
  if (!level.is_integer()) {
    throw ConfigError(ConfigErrorKind::NonCornerMu, "mu=" + config.mu.str() + " is not a corner point for M=" +
                                                        std::to_string(config.M) + "; valid values are " +
                                                        corner_hint(config.M));
  }
  cache_level_ = level.numerator().convert_to<int>();
}

bool DemandVector::is_worst_case() const {
  std::set<int> seen(files.begin(), files.end());
  return seen.size() == files.size();
}

DemandVector worst_case_demand(const NetworkConfig& config) {
  validate(config);
  DemandVector out{config.K, config.M, {}};
  for (int i = 1; i <= config.K + config.M; ++i) out.files.push_back(i);
  return out;
}

void check_demand(const DemandVector& demand, const NetworkConfig& config) {
  if (demand.K != config.K || demand.M != config.M ||
      demand.files.size() != static_cast<std::size_t>(config.K + config.M)) {
    throw ConfigError(ConfigErrorKind::DemandMismatch, "demand vector must have exactly K+M=" +
                                                           std::to_string(config.K + config.M) + " entries");
  }
  for (int f : demand.files) {
    if (f < 1 || f > config.N) {
      throw ConfigError(ConfigErrorKind::DemandMismatch,
                        "demanded file " + std::to_string(f) + " outside [1:" + std::to_string(config.N) + "]");
    }
  }
}

}  // namespace ndtlab
