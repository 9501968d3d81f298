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

#ifndef CYBERINS_MARKET_H_
#define CYBERINS_MARKET_H_

#include <cmath>

#include "cyberins/common.h"

// Primitive duopoly model: linear inverse demand, a common normally
// distributed marginal cost, and a logarithmic investment technology that
// buys lower signal noise.
//
// All "sigma" and "m" quantities in this library are variances, never
// standard deviations.

namespace cyberins {

struct MarketParams {
  double a = 10.0;  // demand intercept
  double b = 1.0;   // own-quantity slope
  double d = 1.0;   // cross-quantity slope

  // Throws DomainError naming the first violated field.
  void Validate() const;
  // Analysis routines need identical products (b == d).
  void RequireIdenticalProducts() const;
};

struct InfoTech {
  double cost_variance = 4.0;   // prior variance of the marginal cost C
  double base_noise = 2.0;      // signal noise variance with no investment
  double efficacy = 3.0;        // noise reduction base, > 1

  void Validate() const;
  double LogEfficacy() const { return std::log(efficacy); }
  // Lowest noise variance accepted by payoff and equilibrium routines.
  double MinNoise() const { return kPoleGuard * base_noise; }
};

// Pair of chosen noise variances (m_i, m_j) under a sharing regime.
struct StrategyProfile {
  double m_i = 0.0;
  double m_j = 0.0;
  Regime regime = Regime::kSharing;

  StrategyProfile Mirrored() const { return {m_j, m_i, regime}; }
};

// One draw of the cost and both noise terms.
struct SignalRealization {
  double cost = 0.0;
  double noise_i = 0.0;
  double noise_j = 0.0;

  double signal_i() const { return cost + noise_i; }
  double signal_j() const { return cost + noise_j; }
};

// Effort needed to reach noise variance m: log base alpha of (m0 / m).
double InvestmentCost(double noise, const InfoTech& tech);

// Noise variance bought with effort h: m0 * alpha^(-h).
double NoiseFromInvestment(double effort, const InfoTech& tech);

double Price(double q_i, double q_j, const MarketParams& params);

// q_i * price - q_i * c - h.
double RealizedProfit(double q_i, double q_j, double cost, double effort,
                      const MarketParams& params);

}  // namespace cyberins

#endif  // CYBERINS_MARKET_H_
