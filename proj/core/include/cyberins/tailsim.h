// Copyright 2026 The cyberins Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYBERINS_TAILSIM_H_
#define CYBERINS_TAILSIM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cyberins/market.h"

namespace cyberins {

// Cost distribution spliced at `threshold`: with probability body_weight a
// normal N(0, body_variance) restricted to (-inf, threshold], with probability
// tail_weight a generalized Pareto tail starting at `threshold`.
//
// The weights are exact mixture weights of the two truncated components. When
// tail_weight is 0 there is nothing to splice and the body is the full normal.
struct TailMixture {
  double body_weight = 0.95;
  double tail_weight = 0.05;
  double threshold = 4.0;
  double body_variance = 4.0;
  double shape = 0.25;  // xi; finite variance needs xi < 1/2
  double scale = 1.0;   // beta

  void Validate() const;
  bool truncated() const { return tail_weight > 0.0; }

  double BodyMean() const;
  double TailMean() const;
  double Mean() const;
  double Variance() const;
  // w2 * E[tail]: the tail's share of the expected cost.
  double TailContribution() const { return tail_weight * TailMean(); }

  // Mixture whose density is continuous at threshold = 2 sqrt(body_variance)
  // unless a threshold is given. Solves w1 f1(x0) = w2 / beta for beta.
  static TailMixture Continuous(double body_variance, double tail_weight,
                                double shape,
                                std::optional<double> threshold = {});
};

struct SimulationResult {
  StrategyProfile profile;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double mean_profit = 0.0;
  double profit_std_error = 0.0;
  double mean_quantity = 0.0;
  double quantity_variance = 0.0;
  double negative_quantity_fraction = 0.0;
  double negative_price_fraction = 0.0;
};

// Draws (C, E_i, E_j) from the normal model, applies the regime's optimal
// quantity rules and averages insurer i's realized profit. Results are
// bit-identical for a fixed seed regardless of thread count.
SimulationResult SimulateStage2(const StrategyProfile& profile,
                                const MarketParams& params,
                                const InfoTech& tech, std::size_t n,
                                std::uint64_t seed);

std::vector<double> SampleTailMixture(const TailMixture& mix, std::size_t n,
                                      std::uint64_t seed);

// Expected tail correction of insurer i's output, from
// delta_i = (b E[delta_j] + eps_i) / (2b) and its mirror.
double TailAdjustment(double eps_i, double eps_j, const MarketParams& params);

struct TailPoint {
  StrategyProfile profile;       // payoff is that of the first insurer
  double normal_payoff = 0.0;    // closed-form payoff under normal costs
  double mixture_payoff = 0.0;   // simulated, tail-adjusted rule
  double std_error = 0.0;
};

struct EpsilonBounds {
  double phi_lower = 0.0;
  double phi_upper = 0.0;
  double epsilon = 0.0;  // phi_lower + phi_upper
  double tail_adjustment = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<TailPoint> points;
  // Largest simulated unilateral gain in the mixture game at the sampled
  // deviations. At a normal-model equilibrium this never exceeds epsilon.
  double mixture_max_gain = 0.0;
};

// Compares the normal-model payoff with the simulated payoff under the
// mixture cost at the profile, its mirror, and `deviation_points` unilateral
// deviations per insurer (log-spaced on [0.01 m0, m0]). Bounds are the largest
// one-sided gaps plus three standard errors.
EpsilonBounds TailPayoffBounds(const StrategyProfile& profile,
                               const MarketParams& params,
                               const InfoTech& tech, const TailMixture& mix,
                               std::size_t n, std::uint64_t seed,
                               int deviation_points = 8);

}  // namespace cyberins

#endif  // CYBERINS_TAILSIM_H_
