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

#ifndef NDTLAB_LINKSIM_HPP
#define NDTLAB_LINKSIM_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ndtlab/combinatorics.hpp"
#include "ndtlab/rational.hpp"

namespace ndtlab {

// Finite-SNR Monte-Carlo check of the power levels behind the one-shot
// scheme. Transmitters only see channel estimates whose error variance is
// P^-alpha; users decode coherently with the true channels.

using cdouble = std::complex<double>;

struct ChannelRealization {
  int K = 0;
  int M = 0;
  double power = 0.0;           // P
  double error_variance = 0.0;  // sigma^2 = P^-alpha

  // Estimates, errors and true channels; true = estimate + error entrywise.
  std::vector<cdouble> f_hat, f_err, f;  // BS -> RN, length M
  std::vector<cdouble> g_hat, g_err, g;  // BS -> UE, length K
  std::vector<cdouble> h_hat, h_err, h;  // RN -> UE, K x M row-major

  cdouble rn_ue(int ue, int rn) const { return h[index(ue, rn)]; }
  cdouble rn_ue_hat(int ue, int rn) const { return h_hat[index(ue, rn)]; }

 private:
  std::size_t index(int ue, int rn) const {
    return static_cast<std::size_t>(ue - 1) * static_cast<std::size_t>(M) + static_cast<std::size_t>(rn - 1);
  }
};

/// Estimates are i.i.d. CN(0,1); errors are i.i.d. CN(0, P^-alpha).
/// Deterministic in `seed`. Requires P > 1.
ChannelRealization draw_channels(int K, int M, const Rational& alpha, double P, std::uint64_t seed);

/// Thrown when an estimated channel submatrix is rank deficient.
class SingularChannelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Received power at each user in `nulled_ues` (in element order) of a
/// symbol sent jointly by the BS and the relays in `holders`, beamformed from
/// estimates to null it at those users. Each transmitter stays within power
/// P with the strongest one at equality. Requires |nulled_ues| <= |holders|.
std::vector<double> zf_residual_power(const ChannelRealization& realization, const IndexSet& nulled_ues,
                                      const IndexSet& holders);

/// Received power at `target_ue` of its own symbol, sent by the BS and
/// `holders` and zero-forced at `nulled_ues` (which must not contain the target).
double zf_desired_power(const ChannelRealization& realization, int target_ue, const IndexSet& nulled_ues,
                        const IndexSet& holders);

struct RateSplitRates {
  double common = 0.0;                // nats per use, decodable by every served user
  std::vector<double> private_rates;  // nats per use after cancelling the common symbol
};

/// Rate splitting: a common symbol at power P/2 from the BS, plus one private
/// symbol per served user at total power P^alpha/2, zero-forced from
/// estimates at the other served users. Users decode the common symbol first
/// treating everything else as noise, then cancel it.
RateSplitRates rate_split_rates(const ChannelRealization& realization, const Rational& alpha,
                                const IndexSet& served_ues, const IndexSet& holders);

enum class Quantity { DesiredSignal, ResidualInterference, CommonRate, PrivateRate };

const char* to_string(Quantity quantity);

/// High-SNR exponent the scheme predicts for each quantity.
double expected_slope(Quantity quantity, const Rational& alpha);

/// Acceptance tolerance on |slope - expected|.
double slope_tolerance(Quantity quantity);

struct ExponentEstimate {
  Quantity quantity = Quantity::DesiredSignal;
  double slope = 0.0;   // d(level) / d(ln P)
  double std_error = 0.0;  // propagated from per-point sample variance
  int trials = 0;
  std::vector<double> levels;  // ln(mean power) or mean rate, one per P
  std::string note;            // set when the variance estimate is unusable
};

struct SimulationSettings {
  int K = 2;
  int M = 4;
  Rational mu{1, 2};
  Rational alpha{1, 2};
  std::vector<double> powers{1e4, 1e6, 1e8};
  int trials = 10000;
  std::uint64_t seed = 1;
  int threads = 1;  // results do not depend on this
};

/// Runs `trials` channel draws per power and regresses each quantity on ln P.
/// Trial i uses the same draw seed at every power. Needs a corner mu with
/// mu M >= 1, at least three increasing powers above 1, and trials >= 1;
/// throws std::invalid_argument otherwise.
std::vector<ExponentEstimate> estimate_exponents(const SimulationSettings& settings);

/// Least-squares slope of y on x and its standard error given per-point
/// standard errors of y.
std::pair<double, double> regression_slope(const std::vector<double>& x, const std::vector<double>& y,
                                           const std::vector<double>& y_stderr);

/// splitmix64-derived seed for trial `trial`, redraw `attempt`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt = 0);

}  // namespace ndtlab

#endif  // NDTLAB_LINKSIM_HPP
