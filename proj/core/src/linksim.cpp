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

#include "ndtlab/linksim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "ndtlab/network.hpp"

namespace ndtlab {

namespace {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Effective channel row of `ue` over the transmitters [BS, holders...].
template <typename GetBs, typename GetRn>
Eigen::RowVectorXcd channel_row(int ue, const std::vector<int>& holders, GetBs bs, GetRn rn) {
  Eigen::RowVectorXcd row(static_cast<Eigen::Index>(holders.size() + 1));
  row(0) = bs(ue);
  for (std::size_t i = 0; i < holders.size(); ++i) row(static_cast<Eigen::Index>(i + 1)) = rn(ue, holders[i]);
  return row;
}

Eigen::RowVectorXcd estimated_row(const ChannelRealization& ch, int ue, const std::vector<int>& holders) {
  return channel_row(
      ue, holders, [&](int k) { return ch.g_hat[static_cast<std::size_t>(k - 1)]; },
      [&](int k, int m) { return ch.rn_ue_hat(k, m); });
}

Eigen::RowVectorXcd true_row(const ChannelRealization& ch, int ue, const std::vector<int>& holders) {
  return channel_row(
      ue, holders, [&](int k) { return ch.g[static_cast<std::size_t>(k - 1)]; },
      [&](int k, int m) { return ch.rn_ue(k, m); });
}

// Projects `direction` onto the null space of the estimated rows of
// `nulled`, then scales so the strongest transmitter has unit amplitude.
Vector zero_forcing_beam(const ChannelRealization& ch, const std::vector<int>& nulled,
                         const std::vector<int>& holders, Vector direction) {
  const auto dim = static_cast<Eigen::Index>(holders.size() + 1);
  if (nulled.size() >= static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("zero forcing needs more transmitters than nulled users");
  }
  Vector v = std::move(direction);
  if (!nulled.empty()) {
    Matrix a(static_cast<Eigen::Index>(nulled.size()), dim);
    for (std::size_t i = 0; i < nulled.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = estimated_row(ch, nulled[i], holders);
    Eigen::FullPivLU<Matrix> lu(a);
    if (lu.rank() < a.rows()) throw SingularChannelError("estimated channel submatrix is rank deficient");
    const Matrix gram = a * a.adjoint();
    v -= a.adjoint() * gram.ldlt().solve(a * v);
  }
  const double peak = v.cwiseAbs().maxCoeff();
  if (!(peak > 1e-12)) throw SingularChannelError("zero-forcing beam vanished");
  return v / peak;
}

Vector unit_bs_direction(std::size_t holders) {
  Vector e = Vector::Zero(static_cast<Eigen::Index>(holders + 1));
  e(0) = 1.0;
  return e;
}

void check_users(const ChannelRealization& ch, const IndexSet& ues) {
  if (!ues.is_subset_of(IndexSet::range(ch.K))) throw std::invalid_argument("user index outside [1:K]");
}

void check_relays(const ChannelRealization& ch, const IndexSet& rns) {
  if (!rns.is_subset_of(IndexSet::range(ch.M))) throw std::invalid_argument("relay index outside [1:M]");
}

Vector matched_direction(const ChannelRealization& ch, int ue, const std::vector<int>& holders) {
  return estimated_row(ch, ue, holders).adjoint();
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt) {
  return splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ (attempt * 0xd1b54a32d192ed03ULL));
}

ChannelRealization draw_channels(int K, int M, const Rational& alpha, double P, std::uint64_t seed) {
  if (K < 1 || M < 1) throw std::invalid_argument("draw_channels: K and M must be positive");
  if (!(P > 1.0)) throw std::invalid_argument("draw_channels: power must exceed 1");
  if (alpha < Rational(0) || alpha > Rational(1)) throw std::invalid_argument("draw_channels: alpha outside [0,1]");

  ChannelRealization ch;
  ch.K = K;
  ch.M = M;
  ch.power = P;
  ch.error_variance = std::pow(P, -alpha.to_double());

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double err_scale = std::sqrt(ch.error_variance);
  auto fill = [&](std::vector<cdouble>& hat, std::vector<cdouble>& err, std::vector<cdouble>& full, std::size_t n) {
    hat.resize(n);
    err.resize(n);
    full.resize(n);
    for (std::size_t i = 0; i < n; ++i) hat[i] = {normal(rng), normal(rng)};
    for (std::size_t i = 0; i < n; ++i) err[i] = cdouble{normal(rng), normal(rng)} * err_scale;
    for (std::size_t i = 0; i < n; ++i) full[i] = hat[i] + err[i];
  };
  fill(ch.f_hat, ch.f_err, ch.f, static_cast<std::size_t>(M));
  fill(ch.g_hat, ch.g_err, ch.g, static_cast<std::size_t>(K));
  fill(ch.h_hat, ch.h_err, ch.h, static_cast<std::size_t>(K) * static_cast<std::size_t>(M));
  return ch;
}

std::vector<double> zf_residual_power(const ChannelRealization& ch, const IndexSet& nulled_ues,
                                      const IndexSet& holders) {
  check_users(ch, nulled_ues);
  check_relays(ch, holders);
  if (nulled_ues.size() > holders.size()) throw std::invalid_argument("more nulled users than cache holders");
  const auto rns = holders.elements();
  const auto ues = nulled_ues.elements();
  const Vector v = zero_forcing_beam(ch, ues, rns, unit_bs_direction(rns.size()));
  std::vector<double> out;
  out.reserve(ues.size());
  for (int ue : ues) out.push_back(ch.power * std::norm((true_row(ch, ue, rns) * v)(0)));
  return out;
}

double zf_desired_power(const ChannelRealization& ch, int target_ue, const IndexSet& nulled_ues,
                        const IndexSet& holders) {
  check_users(ch, nulled_ues);
  check_relays(ch, holders);
  if (nulled_ues.contains(target_ue)) throw std::invalid_argument("target user is also nulled");
  if (target_ue < 1 || target_ue > ch.K) throw std::invalid_argument("target user outside [1:K]");
  const auto rns = holders.elements();
  const Vector v = zero_forcing_beam(ch, nulled_ues.elements(), rns, matched_direction(ch, target_ue, rns));
  return ch.power * std::norm((true_row(ch, target_ue, rns) * v)(0));
}

RateSplitRates rate_split_rates(const ChannelRealization& ch, const Rational& alpha, const IndexSet& served_ues,
                                const IndexSet& holders) {
  check_users(ch, served_ues);
  check_relays(ch, holders);
  if (served_ues.empty()) throw std::invalid_argument("rate splitting needs at least one served user");
  const auto rns = holders.elements();
  const auto ues = served_ues.elements();
  const double private_power = std::pow(ch.power, alpha.to_double()) / (2.0 * static_cast<double>(ues.size()));
  const double common_power = ch.power / 2.0;

  std::vector<Vector> beams;
  beams.reserve(ues.size());
  for (int k : ues) {
    std::vector<int> others;
    for (int j : ues) {
      if (j != k) others.push_back(j);
    }
    beams.push_back(zero_forcing_beam(ch, others, rns, matched_direction(ch, k, rns)));
  }

  RateSplitRates out;
  out.common = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ues.size(); ++i) {
    const Eigen::RowVectorXcd row = true_row(ch, ues[i], rns);
    double own = 0.0;
    double leak = 0.0;
    for (std::size_t j = 0; j < ues.size(); ++j) {
      const double p = private_power * std::norm((row * beams[j])(0));
      (i == j ? own : leak) += p;
    }
    const double common = common_power * std::norm(ch.g[static_cast<std::size_t>(ues[i] - 1)]);
    out.common = std::min(out.common, std::log1p(common / (1.0 + own + leak)));
    out.private_rates.push_back(std::log1p(own / (1.0 + leak)));
  }
  return out;
}

const char* to_string(Quantity quantity) {
  switch (quantity) {
    case Quantity::DesiredSignal: return "desired_signal";
    case Quantity::ResidualInterference: return "residual_interference";
    case Quantity::CommonRate: return "common_rate";
    case Quantity::PrivateRate: return "private_rate";
  }
  return "unknown";
}

double expected_slope(Quantity quantity, const Rational& alpha) {
  const double a = alpha.to_double();
  switch (quantity) {
    case Quantity::DesiredSignal: return 1.0;
    case Quantity::ResidualInterference: return 1.0 - a;
    case Quantity::CommonRate: return 1.0 - a;
    case Quantity::PrivateRate: return a;
  }
  return 0.0;
}

double slope_tolerance(Quantity quantity) { return quantity == Quantity::DesiredSignal ? 0.05 : 0.1; }

std::pair<double, double> regression_slope(const std::vector<double>& x, const std::vector<double>& y,
                                           const std::vector<double>& y_stderr) {
  if (x.size() != y.size() || x.size() != y_stderr.size() || x.size() < 2) {
    throw std::invalid_argument("regression needs matching x, y, stderr vectors of length >= 2");
  }
  const double n = static_cast<double>(x.size());
  double x_mean = 0.0;
  double y_mean = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    x_mean += x[i] / n;
    y_mean += y[i] / n;
  }
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - x_mean) * (x[i] - x_mean);
    sxy += (x[i] - x_mean) * (y[i] - y_mean);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("regression needs distinct x values");
  double var = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double w = (x[i] - x_mean) / sxx;
    var += w * w * y_stderr[i] * y_stderr[i];
  }
  return {sxy / sxx, std::sqrt(var)};
}

namespace {

constexpr int kQuantities = 4;
constexpr int kMaxRedraws = 16;

struct TrialSample {
  double values[kQuantities];
};

TrialSample run_trial(const SimulationSettings& s, int level, double P, std::uint64_t trial) {
  const int psi = std::min(s.K, level);
  const IndexSet holders = IndexSet::range(level);
  const IndexSet nulled = IndexSet::range(psi);
  const IndexSet served = IndexSet::range(std::min(s.K, level + 1));
  for (std::uint64_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
    try {
      const ChannelRealization ch = draw_channels(s.K, s.M, s.alpha, P, trial_seed(s.seed, trial, attempt));
      const auto residual = zf_residual_power(ch, nulled, holders);
      double residual_mean = 0.0;
      for (double r : residual) residual_mean += r / static_cast<double>(residual.size());
      const double desired = zf_desired_power(ch, 1, nulled.without(1), holders);
      const RateSplitRates rates = rate_split_rates(ch, s.alpha, served, holders);
      double private_mean = 0.0;
      for (double r : rates.private_rates) private_mean += r / static_cast<double>(rates.private_rates.size());
      return {{desired, residual_mean, rates.common, private_mean}};
    } catch (const SingularChannelError&) {
      // Probability-zero event; redraw.
    }
  }
  throw SingularChannelError("repeated singular channel draws");
}

}  // namespace

std::vector<ExponentEstimate> estimate_exponents(const SimulationSettings& s) {
  const CornerConfig corner(make_config(s.K, s.M, s.mu, s.alpha));
  const int level = corner.cache_level();
  if (level < 1) throw std::invalid_argument("power exponents need mu M >= 1 so that zero forcing is possible");
  if (s.powers.size() < 3) throw std::invalid_argument("need at least three power points");
  for (std::size_t i = 0; i < s.powers.size(); ++i) {
    if (!(s.powers[i] > 1.0) || (i > 0 && !(s.powers[i] > s.powers[i - 1]))) {
      throw std::invalid_argument("powers must be increasing and above 1");
    }
  }
  if (s.trials < 1) throw std::invalid_argument("need at least one trial");

  const std::size_t trials = static_cast<std::size_t>(s.trials);
  const int workers = std::max(1, std::min(s.threads, s.trials));

  std::vector<double> x;
  std::vector<std::vector<double>> levels(kQuantities), errors(kQuantities);
  for (double P : s.powers) {
    x.push_back(std::log(P));
    // Per-trial samples land in fixed slots and are reduced in trial order,
    // so the worker count cannot change the result.
    std::vector<TrialSample> samples(trials);
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t) samples[t] = run_trial(s, level, P, t);
    };
    if (workers == 1) {
      work(0, trials);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (trials + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
      for (std::size_t begin = 0; begin < trials; begin += chunk) pool.emplace_back(work, begin, std::min(trials, begin + chunk));
    }

    for (int q = 0; q < kQuantities; ++q) {
      double mean = 0.0;
      for (const auto& sample : samples) mean += sample.values[q];
      mean /= static_cast<double>(trials);
      double var = 0.0;
      for (const auto& sample : samples) var += (sample.values[q] - mean) * (sample.values[q] - mean);
      var = trials > 1 ? var / static_cast<double>(trials - 1) : std::numeric_limits<double>::infinity();
      const double se_mean = std::sqrt(var / static_cast<double>(trials));
      const auto quantity = static_cast<Quantity>(q);
      if (quantity == Quantity::DesiredSignal || quantity == Quantity::ResidualInterference) {
        // Level is ln of the mean power; delta-method error.
        levels[static_cast<std::size_t>(q)].push_back(std::log(mean));
        errors[static_cast<std::size_t>(q)].push_back(se_mean / mean);
      } else {
        levels[static_cast<std::size_t>(q)].push_back(mean);
        errors[static_cast<std::size_t>(q)].push_back(se_mean);
      }
    }
  }

  std::vector<ExponentEstimate> out;
  for (int q = 0; q < kQuantities; ++q) {
    ExponentEstimate e;
    e.quantity = static_cast<Quantity>(q);
    e.trials = s.trials;
    e.levels = levels[static_cast<std::size_t>(q)];
    auto [slope, se] = regression_slope(x, e.levels, errors[static_cast<std::size_t>(q)]);
    e.slope = slope;
    e.std_error = se;
    if (!std::isfinite(se)) e.note = "insufficient trials for a finite variance estimate";
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace ndtlab
