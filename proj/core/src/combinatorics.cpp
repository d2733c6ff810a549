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

#include "ndtlab/combinatorics.hpp"

#include <bit>
#include <stdexcept>

namespace ndtlab {

namespace {

void check_element(int element) {
  if (element < 1 || element > IndexSet::kMaxElement) {
    throw std::out_of_range("IndexSet element out of [1:64]: " + std::to_string(element));
  }
}

std::uint64_t bit(int element) { return std::uint64_t{1} << (element - 1); }

}  // namespace

BigInt binom(int n, int k) {
  if (n < 0) throw std::invalid_argument("binom: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  // Each partial product out * (n - k + i) / i is itself a binomial, so the
  // division is exact at every step.
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

IndexSet::IndexSet(std::initializer_list<int> elements) {
  for (int e : elements) {
    check_element(e);
    mask_ |= bit(e);
  }
}

IndexSet IndexSet::range(int n) {
  if (n < 0 || n > kMaxElement) throw std::out_of_range("IndexSet::range: n out of [0:64]");
  if (n == kMaxElement) return from_mask(~std::uint64_t{0});
  return from_mask((std::uint64_t{1} << n) - 1);
}

bool IndexSet::contains(int element) const {
  if (element < 1 || element > kMaxElement) return false;
  return (mask_ & bit(element)) != 0;
}

int IndexSet::size() const { return std::popcount(mask_); }

IndexSet IndexSet::with(int element) const {
  check_element(element);
  return from_mask(mask_ | bit(element));
}

IndexSet IndexSet::without(int element) const {
  check_element(element);
  return from_mask(mask_ & ~bit(element));
}

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string IndexSet::str() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

IndexSet IndexSet::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw std::invalid_argument("malformed index set: '" + text + "'");
  }
  IndexSet out;
  std::string body = text.substr(1, text.size() - 2);
  if (!body.empty() && body.back() == ',') throw std::invalid_argument("malformed index set: '" + text + "'");
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    std::string token = body.substr(pos, comma - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed index set: '" + text + "'");
    }
    out = out.with(std::stoi(token));
    pos = comma + 1;
  }
  return out;
}

std::strong_ordering operator<=>(const IndexSet& lhs, const IndexSet& rhs) {
  // Lexicographic over sorted elements: the first differing element decides,
  // and a proper prefix sorts first.
  std::uint64_t diff = lhs.mask_ ^ rhs.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  std::uint64_t lowest = diff & (~diff + 1);
  bool in_lhs = (lhs.mask_ & lowest) != 0;
  // The side holding the smaller element sorts first, unless the other side
  // has run out of elements above the common prefix.
  std::uint64_t below = lowest - 1;
  std::uint64_t lhs_rest = lhs.mask_ & ~below;
  std::uint64_t rhs_rest = rhs.mask_ & ~below;
  if (in_lhs) return rhs_rest == 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  return lhs_rest == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<IndexSet> k_subsets(int n, int k) {
  if (n < 0 || n > IndexSet::kMaxElement) throw std::out_of_range("k_subsets: n out of [0:64]");
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    std::uint64_t mask = 0;
    for (int e : idx) mask |= bit(e);
    out.push_back(IndexSet::from_mask(mask));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace ndtlab
