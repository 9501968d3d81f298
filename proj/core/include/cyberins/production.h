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

#ifndef CYBERINS_PRODUCTION_H_
#define CYBERINS_PRODUCTION_H_

#include "cyberins/market.h"

namespace cyberins {

// Quantity rule of one insurer without sharing: q(z) = intercept + loading*z.
struct AffineRule {
  double intercept = 0.0;
  double loading = 0.0;

  double operator()(double signal) const { return intercept + loading * signal; }
};

// Maximizer of the interim expected profit given the expected rival output
// and the expected cost.
double BestReplyQuantity(double expected_rival_q, double cost_estimate,
                         const MarketParams& params);

// Common output of both insurers when both observe the pooled estimate.
double SharingQuantity(double pooled_estimate, const MarketParams& params);

// Closed-form solution of the coupled affine fixed point for insurer i.
AffineRule NonSharingCoefficients(double sigma, double m_i, double m_j,
                                  const MarketParams& params);

double NonSharingQuantity(double signal, const AffineRule& rule);

// Interim payoff at the optimal quantity: b*q^2 - h.
double InterimPayoff(double q, double effort, const MarketParams& params);

// Residuals of the two fixed-point equations the affine rules must satisfy,
// evaluated for (rule_i, rule_j). Both are zero at an equilibrium pair.
struct AffineResidual {
  double intercept = 0.0;
  double loading = 0.0;
};
AffineResidual AffineFixedPointResidual(const AffineRule& rule_i,
                                        const AffineRule& rule_j, double sigma,
                                        double m_i, const MarketParams& params);

}  // namespace cyberins

#endif  // CYBERINS_PRODUCTION_H_
