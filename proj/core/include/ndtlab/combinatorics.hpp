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

#ifndef NDTLAB_COMBINATORICS_HPP
#define NDTLAB_COMBINATORICS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ndtlab/rational.hpp"

namespace ndtlab {

/// n-choose-k; zero when k < 0 or k > n. Requires n >= 0.
BigInt binom(int n, int k);

/// A subset of [1:64], stored as a bitmask. Ordering is lexicographic over
/// the sorted element sequence, which is the order `k_subsets` emits.
class IndexSet {
 public:
  static constexpr int kMaxElement = 64;

  IndexSet() = default;
  IndexSet(std::initializer_list<int> elements);
  static IndexSet from_mask(std::uint64_t mask) { return IndexSet(mask, 0); }
  /// {1, ..., n}
  static IndexSet range(int n);

  bool contains(int element) const;
  int size() const;
  bool empty() const { return mask_ == 0; }
  std::uint64_t mask() const { return mask_; }

  IndexSet with(int element) const;
  IndexSet without(int element) const;
  bool is_subset_of(const IndexSet& other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<int> elements() const;

  /// `{1,3,4}`; the empty set prints as `{}`.
  std::string str() const;
  static IndexSet parse(const std::string& text);

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend std::strong_ordering operator<=>(const IndexSet& lhs, const IndexSet& rhs);

 private:
  IndexSet(std::uint64_t mask, int) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

/// All k-element subsets of [1:n] in lexicographic order.
std::vector<IndexSet> k_subsets(int n, int k);

}  // namespace ndtlab

#endif  // NDTLAB_COMBINATORICS_HPP
