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

#include "cyberins/estimation.h"

#include "cyberins/common.h"

namespace cyberins {

namespace {

void CheckVariances(double sigma, double m_i, double m_j) {
  if (!(sigma > 0.0)) throw DomainError("cost variance must be positive");
  if (!(m_i >= 0.0) || !(m_j >= 0.0)) {
    throw DomainError("noise variances must be non-negative");
  }
}

double PoolingNormalizer(double sigma, double m_i, double m_j) {
  CheckVariances(sigma, m_i, m_j);
  const double k0 = sigma * (m_i + m_j) + m_i * m_j;
  if (!(k0 > 0.0)) {
    throw DomainError("pooled estimate undefined: both signals are noiseless");
  }
  return k0;
}

}  // namespace

EstimatorWeights EstimatorWeights::Compute(double sigma, double m_i,
                                           double m_j) {
  const double k0 = PoolingNormalizer(sigma, m_i, m_j);
  EstimatorWeights w;
  w.shrinkage_i = ShrinkageWeight(sigma, m_i);
  w.k0 = k0;
  w.k_i = sigma * m_j / k0;
  w.k_j = sigma * m_i / k0;
  w.k_cost = sigma * (m_i + m_j) / k0;
  return w;
}

double ShrinkageWeight(double sigma, double m_i) {
  CheckVariances(sigma, m_i, 0.0);
  return sigma / (sigma + m_i);
}

double SingleSignalEstimate(double z_i, double sigma, double m_i) {
  return ShrinkageWeight(sigma, m_i) * z_i;
}

double PooledEstimate(double z_i, double z_j, double sigma, double m_i,
                      double m_j) {
  const double k0 = PoolingNormalizer(sigma, m_i, m_j);
  return (sigma * m_j * z_i + sigma * m_i * z_j) / k0;
}

double PooledVariance(double sigma, double m_i, double m_j) {
  const double k0 = PoolingNormalizer(sigma, m_i, m_j);
  return sigma * sigma * (m_i + m_j) / k0;
}

double AdversarySignalExpectation(double z_i, double sigma, double m_i) {
  return SingleSignalEstimate(z_i, sigma, m_i);
}

double PosteriorVariance(double sigma, double m_i) {
  CheckVariances(sigma, m_i, 0.0);
  return sigma * m_i / (sigma + m_i);
}

double PosteriorVariance(double sigma, double m_i, double m_j) {
  const double k0 = PoolingNormalizer(sigma, m_i, m_j);
  return sigma * m_i * m_j / k0;
}

}  // namespace cyberins
