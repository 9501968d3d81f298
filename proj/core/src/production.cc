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

#include "cyberins/production.h"

#include "cyberins/estimation.h"

namespace cyberins {

double BestReplyQuantity(double expected_rival_q, double cost_estimate,
                         const MarketParams& params) {
  if (!(params.b > 0.0)) throw DomainError("field 'b' must be positive");
  return (params.a - params.b * expected_rival_q - cost_estimate) /
         (2.0 * params.b);
}

double SharingQuantity(double pooled_estimate, const MarketParams& params) {
  if (!(params.b > 0.0)) throw DomainError("field 'b' must be positive");
  return (params.a - pooled_estimate) / (3.0 * params.b);
}

AffineRule NonSharingCoefficients(double sigma, double m_i, double m_j,
                                  const MarketParams& params) {
  if (!(sigma > 0.0) || !(m_i > 0.0) || !(m_j > 0.0)) {
    throw DomainError("affine rule needs positive variances");
  }
  if (!(params.b > 0.0)) throw DomainError("field 'b' must be positive");
  const double x_i = sigma + m_i;
  const double x_j = sigma + m_j;
  const double denominator = params.b * (sigma * sigma - 4.0 * x_i * x_j);
  if (denominator == 0.0) throw DomainError("degenerate affine rule");
  AffineRule rule;
  rule.intercept = params.a / (3.0 * params.b);
  rule.loading = sigma * (2.0 * x_j - sigma) / denominator;
  return rule;
}

double NonSharingQuantity(double signal, const AffineRule& rule) {
  return rule(signal);
}

double InterimPayoff(double q, double effort, const MarketParams& params) {
  return params.b * q * q - effort;
}

AffineResidual AffineFixedPointResidual(const AffineRule& rule_i,
                                        const AffineRule& rule_j, double sigma,
                                        double m_i,
                                        const MarketParams& params) {
  const double b = params.b;
  const double shrink = ShrinkageWeight(sigma, m_i);
  AffineResidual r;
  r.intercept = rule_i.intercept - (params.a - b * rule_j.intercept) / (2.0 * b);
  r.loading = rule_i.loading + shrink * (1.0 + b * rule_j.loading) / (2.0 * b);
  return r;
}

}  // namespace cyberins
