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

#ifndef CYBERINS_PAYOFF_H_
#define CYBERINS_PAYOFF_H_

#include "cyberins/market.h"

namespace cyberins {

// Stage-1 expected payoff J_i(m_i, m_j) of insurer i and its partial
// derivatives with respect to its own noise variance m_i. Both arguments must
// lie in [kPoleGuard * m0, m0]; anything else throws DomainError.

double PayoffSharing(double m_i, double m_j, const MarketParams& params,
                     const InfoTech& tech);
double PayoffNonSharing(double m_i, double m_j, const MarketParams& params,
                        const InfoTech& tech);

double MarginalSharing(double m_i, double m_j, const MarketParams& params,
                       const InfoTech& tech);
double SecondDerivativeSharing(double m_i, double m_j,
                               const MarketParams& params,
                               const InfoTech& tech);

double MarginalNonSharing(double m_i, double m_j, const MarketParams& params,
                          const InfoTech& tech);
double SecondDerivativeNonSharing(double m_i, double m_j,
                                  const MarketParams& params,
                                  const InfoTech& tech);

// Shifted variances x = m + sigma and the two factors of the no-sharing
// marginal benefit term, sigma^2/b * f1 * f2.
struct MarginalHelpers {
  double x_i = 0.0;
  double x_j = 0.0;
  double f1 = 0.0;  // (4 x_i x_j + s^2) / (4 x_i x_j - s^2)
  double f2 = 0.0;  // (2 x_j - s)^2 / (4 x_i x_j - s^2)^2

  static MarginalHelpers Compute(double sigma, double m_i, double m_j);
};

// g(x_i, x_j) = 16 x_j (s^2 + 2 x_i x_j)(x_i - s) - (4 x_i x_j + s^2)(4 x_i x_j - s^2).
// At a point where the no-sharing first-order condition holds, the second
// derivative has the sign of g.
double NonSharingCurvatureFactor(double sigma, double x_i, double x_j);

// Regime-tagged view over the functions above.
class PayoffSurface {
 public:
  PayoffSurface(Regime regime, const MarketParams& params,
                const InfoTech& tech);

  Regime regime() const { return regime_; }
  const MarketParams& params() const { return params_; }
  const InfoTech& tech() const { return tech_; }

  double Value(double m_i, double m_j) const;
  double Marginal(double m_i, double m_j) const;
  double SecondDerivative(double m_i, double m_j) const;

 private:
  Regime regime_;
  MarketParams params_;
  InfoTech tech_;
};

}  // namespace cyberins

#endif  // CYBERINS_PAYOFF_H_
