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

#ifndef NDTLAB_NETWORK_HPP
#define NDTLAB_NETWORK_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ndtlab/rational.hpp"

namespace ndtlab {

enum class ConfigErrorKind {
  ZeroNodes,         // K == 0 or M == 0
  MuOutOfRange,      // mu outside [0,1]
  AlphaOutOfRange,   // alpha outside [0,1]
  LibraryTooSmall,   // N < K + M
  NonCornerMu,       // mu * M is not an integer
  DemandMismatch,    // demand vector has the wrong length or entries
};

const char* to_string(ConfigErrorKind kind);

class ConfigError : public std::invalid_argument {
 public:
  ConfigError(ConfigErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  ConfigErrorKind kind() const { return kind_; }

 private:
  ConfigErrorKind kind_;
};

/// One BS, `M` cache-equipped relays, `K` users, a library of `N` files,
/// fractional cache size `mu` and CSI quality exponent `alpha`.
struct NetworkConfig {
  int K = 1;
  int M = 1;
  int N = 2;
  Rational mu;
  Rational alpha{1};

  friend bool operator==(const NetworkConfig&, const NetworkConfig&) = default;
};

/// Throws ConfigError on the first violated invariant; otherwise returns the
/// config unchanged.
NetworkConfig validate(const NetworkConfig& config);

/// Config with N defaulted to K + M.
NetworkConfig make_config(int K, int M, const Rational& mu, const Rational& alpha);

/// A validated config whose cache size sits on the corner grid {0, 1/M, ..., 1}.
class CornerConfig {
 public:
  /// Validates and checks the corner condition; throws ConfigError otherwise.
  explicit CornerConfig(const NetworkConfig& config);

  const NetworkConfig& base() const { return base_; }
  int K() const { return base_.K; }
  int M() const { return base_.M; }
  const Rational& mu() const { return base_.mu; }
  const Rational& alpha() const { return base_.alpha; }
  /// mu * M, the number of relays sharing each cached symbol.
  int cache_level() const { return cache_level_; }

  friend bool operator==(const CornerConfig&, const CornerConfig&) = default;

 private:
  NetworkConfig base_;
  int cache_level_ = 0;
};

/// Valid corner cache sizes c/M for c in [0:M], as a readable list.
std::string corner_hint(int M);

/// File indices requested by the K users followed by the M relays.
struct DemandVector {
  int K = 0;
  int M = 0;
  std::vector<int> files;

  int ue_demand(int ue) const { return files.at(static_cast<std::size_t>(ue - 1)); }
  int rn_demand(int rn) const { return files.at(static_cast<std::size_t>(K + rn - 1)); }
  /// All K + M requests pairwise distinct.
  bool is_worst_case() const;

  friend bool operator==(const DemandVector&, const DemandVector&) = default;
};

/// (1, 2, ..., K+M). Throws ConfigError when N < K + M.
DemandVector worst_case_demand(const NetworkConfig& config);

/// Checks length K + M and entries in [1:N]; throws ConfigError otherwise.
void check_demand(const DemandVector& demand, const NetworkConfig& config);

}  // namespace ndtlab

#endif  // NDTLAB_NETWORK_HPP
