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

#ifndef NDTLAB_TESTS_ORACLES_HPP
#define NDTLAB_TESTS_ORACLES_HPP

// Reference computations written directly from the defining formulas with
// plain Boost rationals. They share no code with the library.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ndtlab/rational.hpp"

namespace oracle {

using Z = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

inline Q q(long long n, long long d = 1) { return Q(n) / Q(d); }

inline Q from(const ndtlab::Rational& r) { return Q(r.numerator()) / Q(r.denominator()); }

inline ndtlab::Rational to(const Q& v) {
  return ndtlab::Rational(boost::multiprecision::numerator(v), boost::multiprecision::denominator(v));
}

// Pascal's triangle.
inline Z choose(int n, int k) {
  static std::map<std::pair<int, int>, Z> memo;
  if (k < 0 || k > n) return 0;
  if (k == 0 || k == n) return 1;
  const auto key = std::make_pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Z v = choose(n - 1, k - 1) + choose(n - 1, k);
  memo.emplace(key, v);
  return v;
}

inline Q man(int M, const Q& mu) { return Q(M) * (1 - mu) / (1 + mu * M); }

// max{1, max over s in [1:min{M+1,K}], l in [M+1-s : M] of the converse term}.
inline Q lower_bound(int K, int M, const Q& mu) {
  Q best = 1;
  for (int s = 1; s <= std::min(M + 1, K); ++s) {
    const int sb = M + 1 - s;
    for (int l = sb; l <= M; ++l) {
      const Q term = (Q(K + l) - mu * (Q(sb) * (Q(K - s) + q(sb - 1, 2)) + q(l * (l + 1), 2))) / Q(s);
      best = std::max(best, term);
    }
  }
  return best;
}

inline Q one_shot(int K, int M, const Q& mu, const Q& alpha) {
  if (mu == 0) return K + M;
  const Q m = man(M, mu);
  const Q t = mu * M;
  const Q indicator = Q(K) <= t ? 1 : 0;
  const Q spatial = std::min(Q(K - 1), t);
  return std::max(m, (Q(K) + m * (1 - indicator * alpha)) / (1 + spatial * alpha));
}

// Lower convex envelope at mu: in one dimension the hull value is the
// smallest chord through two points that bracket mu.
inline Q envelope(int K, int M, const Q& alpha, const Q& mu) {
  std::vector<std::pair<Q, Q>> pts;
  for (int c = 0; c <= M; ++c) pts.emplace_back(q(c, M), one_shot(K, M, q(c, M), alpha));
  Q best = -1;
  bool found = false;
  for (const auto& [xa, ya] : pts) {
    for (const auto& [xb, yb] : pts) {
      Q v;
      if (xa == mu && xb == mu) {
        v = ya;
      } else if (xa <= mu && mu <= xb && xa < xb) {
        v = ya + (yb - ya) * (mu - xa) / (xb - xa);
      } else {
        continue;
      }
      if (!found || v < best) best = v;
      found = true;
    }
  }
  return best;
}

inline Q full_cache_bound(int K, int M, const Q& alpha) { return Q(K) / (1 + Q(std::max(K - 1, M)) * alpha); }

struct ScheduleCounts {
  Z gamma, L_prime, T1;
  Q L_tilde, T2, ndt;
};

inline ScheduleCounts schedule_counts(int K, int M, int t, const Q& alpha) {
  ScheduleCounts c;
  if (t == 0) {
    c.gamma = 1;
    c.L_prime = 1;
    c.T1 = K + M;
    c.L_tilde = 0;
    c.T2 = 0;
    c.ndt = K + M;
    return c;
  }
  const int psi = std::min(K, t);
  c.gamma = choose(K, psi);
  c.L_prime = c.gamma * choose(M, t);
  c.T1 = c.gamma * choose(M, t + 1);
  c.L_tilde = Q(choose(M, t + 1) * choose(K - 1, psi - 1)) * alpha;
  const Q rest = c.L_tilde < Q(c.L_prime) ? Q(c.L_prime) - c.L_tilde : Q(0);
  c.T2 = Q(K) * rest / (1 + Q(std::min(K - 1, t)) * alpha);
  c.ndt = (Q(c.T1) + c.T2) / Q(c.L_prime);
  return c;
}

inline std::vector<Q> alpha_grid() { return {0, q(1, 4), q(1, 2), q(3, 4), 1}; }

}  // namespace oracle

#endif  // NDTLAB_TESTS_ORACLES_HPP
