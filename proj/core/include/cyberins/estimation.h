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

#ifndef CYBERINS_ESTIMATION_H_
#define CYBERINS_ESTIMATION_H_

namespace cyberins {

// Weights of the conditional-mean estimators for a normal cost observed
// through normal noise. With pooling normalizer
//   k0 = sigma*m_i + sigma*m_j + m_i*m_j
// the two-signal estimate is (sigma*m_j*z_i + sigma*m_i*z_j) / k0, and as a
// random variable it decomposes as k_c*C + k_i*E_i + k_j*E_j.
struct EstimatorWeights {
  double shrinkage_i = 1.0;  // sigma / (sigma + m_i)
  double k0 = 0.0;
  double k_cost = 0.0;       // sigma * (m_i + m_j) / k0
  double k_i = 0.0;          // sigma * m_j / k0
  double k_j = 0.0;          // sigma * m_i / k0

  static EstimatorWeights Compute(double sigma, double m_i, double m_j);
};

double ShrinkageWeight(double sigma, double m_i);

// E[C | Z_i].
double SingleSignalEstimate(double z_i, double sigma, double m_i);

// E[C | Z_i, Z_j]. Throws DomainError when both signals are noiseless.
double PooledEstimate(double z_i, double z_j, double sigma, double m_i,
                      double m_j);

// Variance of the pooled estimate as a random variable before signals are
// drawn: sigma^2 (m_i + m_j) / k0.
double PooledVariance(double sigma, double m_i, double m_j);

// E[Z_j | Z_i]. The rival's noise is independent and mean zero, so this is
// the single-signal cost estimate.
double AdversarySignalExpectation(double z_i, double sigma, double m_i);

// Posterior variance of C given one or two signals.
double PosteriorVariance(double sigma, double m_i);
double PosteriorVariance(double sigma, double m_i, double m_j);

}  // namespace cyberins

#endif  // CYBERINS_ESTIMATION_H_
