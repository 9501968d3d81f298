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

#include "cyberins/payoff.h"

#include <string>

#include "cyberins/estimation.h"

namespace cyberins {

namespace {

void CheckDomain(double m_i, double m_j, const MarketParams& params,
                 const InfoTech& tech) {
  params.RequireIdenticalProducts();
  tech.Validate();
  const double lo = tech.MinNoise();
  const double hi = tech.base_noise;
  if (!(m_i >= lo && m_i <= hi) || !(m_j >= lo && m_j <= hi)) {
    throw DomainError("noise variances must lie in [" + std::to_string(lo) +
                      ", m0=" + std::to_string(hi) + "]");
  }
}

// k0 written as (s + m_i)(s + m_j) - s^2.
double Normalizer(double sigma, double m_i, double m_j) {
  return sigma * (m_i + m_j) + m_i * m_j;
}

}  // namespace

double PayoffSharing(double m_i, double m_j, const MarketParams& params,
                     const InfoTech& tech) {
  CheckDomain(m_i, m_j, params, tech);
  const double sigma = tech.cost_variance;
  const double estimate_variance = PooledVariance(sigma, m_i, m_j);
  return (estimate_variance + params.a * params.a) / (9.0 * params.b) -
         InvestmentCost(m_i, tech);
}

double PayoffNonSharing(double m_i, double m_j, const MarketParams& params,
                        const InfoTech& tech) {
  CheckDomain(m_i, m_j, params, tech);
  const double sigma = tech.cost_variance;
  const double x_i = sigma + m_i;
  const double x_j = sigma + m_j;
  const double gap = sigma * sigma - 4.0 * x_i * x_j;
  const double spread = 2.0 * x_j - sigma;
  return params.a * params.a / (9.0 * params.b) +
         sigma * sigma * spread * spread * x_i / (params.b * gap * gap) -
         InvestmentCost(m_i, tech);
}

double MarginalSharing(double m_i, double m_j, const MarketParams& params,
                       const InfoTech& tech) {
  CheckDomain(m_i, m_j, params, tech);
  const double sigma = tech.cost_variance;
  const double k0 = Normalizer(sigma, m_i, m_j);
  return -(sigma * sigma / (9.0 * params.b)) * m_j * m_j / (k0 * k0) +
         1.0 / (m_i * tech.LogEfficacy());
}

double SecondDerivativeSharing(double m_i, double m_j,
                               const MarketParams& params,
                               const InfoTech& tech) {
  CheckDomain(m_i, m_j, params, tech);
  const double sigma = tech.cost_variance;
  const double k0 = Normalizer(sigma, m_i, m_j);
  return (sigma * sigma / (9.0 * params.b)) * 2.0 * m_j * m_j *
             (sigma + m_j) / (k0 * k0 * k0) -
         1.0 / (m_i * m_i * tech.LogEfficacy());
}

MarginalHelpers MarginalHelpers::Compute(double sigma, double m_i,
                                         double m_j) {
  MarginalHelpers h;
  h.x_i = m_i + sigma;
  h.x_j = m_j + sigma;
  const double s2 = sigma * sigma;
  const double d = 4.0 * h.x_i * h.x_j - s2;
  const double spread = 2.0 * h.x_j - sigma;
  h.f1 = (4.0 * h.x_i * h.x_j + s2) / d;
  h.f2 = spread * spread / (d * d);
  return h;
}

double MarginalNonSharing(double m_i, double m_j, const MarketParams& params,
                          const InfoTech& tech) {
  CheckDomain(m_i, m_j, params, tech);
  const double sigma = tech.cost_variance;
  const auto h = MarginalHelpers::Compute(sigma, m_i, m_j);
  return 1.0 / ((h.x_i - sigma) * tech.LogEfficacy()) -
         (sigma * sigma / params.b) * h.f1 * h.f2;
}

double SecondDerivativeNonSharing(double m_i, double m_j,
                                  const MarketParams& params,
                                  const InfoTech& tech) {
  CheckDomain(m_i, m_j, params, tech);
  const double sigma = tech.cost_variance;
  const double s2 = sigma * sigma;
  const double x_i = m_i + sigma;
  const double x_j = m_j + sigma;
  const double d = 4.0 * x_i * x_j - s2;
  const double spread = 2.0 * x_j - sigma;
  // d/dx_i of (4 x_i x_j + s^2) / d^3 is -16 x_j (2 x_i x_j + s^2) / d^4.
  return -1.0 / (m_i * m_i * tech.LogEfficacy()) +
         (s2 / params.b) * spread * spread * 16.0 * x_j *
             (2.0 * x_i * x_j + s2) / (d * d * d * d);
}

double NonSharingCurvatureFactor(double sigma, double x_i, double x_j) {
  const double s2 = sigma * sigma;
  const double p = 4.0 * x_i * x_j;
  return 16.0 * x_j * (s2 + 2.0 * x_i * x_j) * (x_i - sigma) -
         (p + s2) * (p - s2);
}

PayoffSurface::PayoffSurface(Regime regime, const MarketParams& params,
                             const InfoTech& tech)
    : regime_(regime), params_(params), tech_(tech) {
  params_.RequireIdenticalProducts();
  tech_.Validate();
}

double PayoffSurface::Value(double m_i, double m_j) const {
  return regime_ == Regime::kSharing
             ? PayoffSharing(m_i, m_j, params_, tech_)
             : PayoffNonSharing(m_i, m_j, params_, tech_);
}

double PayoffSurface::Marginal(double m_i, double m_j) const {
  return regime_ == Regime::kSharing
             ? MarginalSharing(m_i, m_j, params_, tech_)
             : MarginalNonSharing(m_i, m_j, params_, tech_);
}

double PayoffSurface::SecondDerivative(double m_i, double m_j) const {
  return regime_ == Regime::kSharing
             ? SecondDerivativeSharing(m_i, m_j, params_, tech_)
             : SecondDerivativeNonSharing(m_i, m_j, params_, tech_);
}

}  // namespace cyberins
