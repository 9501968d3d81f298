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

#include <cmath>
#include <numbers>
#include <random>

#include "cyberins/payoff.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace cyberins {
namespace {

using oracle::Real;

const MarketParams kParams{10.0, 1.0, 1.0};
const InfoTech kTech{4.0, 2.0, 3.0};

TEST(PayoffSharingTest, WorkedPoint) {
  const double expected = (16.0 * 4.0 / 20.0 + 100.0) / 9.0;
  EXPECT_NEAR(PayoffSharing(2.0, 2.0, kParams, kTech), expected, 1e-13);
  EXPECT_NEAR(PayoffSharing(2.0, 2.0, kParams, kTech), 11.4667, 5e-5);
}

TEST(PayoffNonSharingTest, WorkedPoint) {
  // 16 * 64 * 6 / 128^2 = 0.375, and the affine-rule form agrees.
  const double expected = 100.0 / 9.0 + 16.0 * 64.0 * 6.0 / (128.0 * 128.0);
  EXPECT_NEAR(PayoffNonSharing(2.0, 2.0, kParams, kTech), expected, 1e-13);
  EXPECT_NEAR(PayoffNonSharing(2.0, 2.0, kParams, kTech),
              100.0 / 9.0 + 0.0625 * 6.0, 1e-13);
  EXPECT_NEAR(PayoffNonSharing(2.0, 2.0, kParams, kTech), 11.4861, 5e-5);
}

TEST(PayoffTest, NoUncertaintyLimit) {
  const InfoTech tech{1e-12, 9.0, 3.0};
  const double h = std::log(9.0 / 1.0) / std::log(3.0);
  EXPECT_NEAR(PayoffSharing(1.0, 4.0, kParams, tech), 100.0 / 9.0 - h, 1e-10);
  EXPECT_NEAR(PayoffNonSharing(1.0, 4.0, kParams, tech), 100.0 / 9.0 - h,
              1e-10);
}

TEST(PayoffTest, MatchesIndependentFormsAtRandomPoints) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 2000; ++k) {
    oracle::Params p;
    p.a = oracle::Uniform(rng, 1, 30);
    p.b = oracle::Uniform(rng, 0.2, 5);
    p.sigma = oracle::LogUniform(rng, 0.01, 1000);
    p.m0 = oracle::LogUniform(rng, 0.1, 500);
    p.alpha = oracle::Uniform(rng, 1.1, 10);
    const MarketParams mp{double(p.a), double(p.b), double(p.b)};
    const InfoTech tech{double(p.sigma), double(p.m0), double(p.alpha)};
    const double mi = tech.base_noise * oracle::LogUniform(rng, 1e-6, 1);
    const double mj = tech.base_noise * oracle::LogUniform(rng, 1e-6, 1);
    const double scale = 1.0 + std::abs(double(p.a * p.a / p.b));
    EXPECT_NEAR(PayoffSharing(mi, mj, mp, tech),
                double(oracle::SharingPayoff(mi, mj, p)), 1e-13 * scale);
    EXPECT_NEAR(PayoffNonSharing(mi, mj, mp, tech),
                double(oracle::NonSharingPayoff(mi, mj, p)), 1e-13 * scale);
  }
}

TEST(MarginalTest, WorkedPoints) {
  const double ln3 = std::log(3.0);
  EXPECT_NEAR(MarginalSharing(2.0, 2.0, kParams, kTech),
              -(64.0 / 9.0) / 400.0 + 1.0 / (2.0 * ln3), 1e-14);
  EXPECT_NEAR(MarginalSharing(2.0, 2.0, kParams, kTech), 0.43735, 1e-5);
  EXPECT_NEAR(MarginalNonSharing(2.0, 2.0, kParams, kTech),
              1.0 / (2.0 * ln3) - 16.0 * 1.25 * (64.0 / 16384.0), 1e-14);
  EXPECT_NEAR(MarginalNonSharing(2.0, 2.0, kParams, kTech), 0.37700, 1e-5);
}

TEST(MarginalTest, PolesAndLimits) {
  const double tiny = kTech.MinNoise();
  EXPECT_GT(MarginalSharing(tiny, 1.0, kParams, kTech), 1e10);
  EXPECT_GT(MarginalNonSharing(tiny, 1.0, kParams, kTech), 1e10);
  EXPECT_LT(SecondDerivativeSharing(tiny, 1.0, kParams, kTech), -1e20);
  const double mi = 1.5;
  EXPECT_NEAR(MarginalSharing(mi, tiny, kParams, kTech),
              1.0 / (mi * std::log(3.0)), 1e-12);
  EXPECT_THROW(MarginalSharing(0.5 * tiny, 1.0, kParams, kTech), DomainError);
  EXPECT_THROW(PayoffNonSharing(1.0, 2.5, kParams, kTech), DomainError);
  EXPECT_THROW(PayoffSharing(1.0, 1.0, {10.0, 1.0, 2.0}, kTech), DomainError);
}

// Derivatives of the long-double oracle payoffs by a five-point stencil.
TEST(MarginalTest, MatchesOracleDerivatives) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 1000; ++k) {
    oracle::Params p;
    p.b = oracle::Uniform(rng, 0.2, 5);
    p.sigma = oracle::LogUniform(rng, 0.1, 500);
    p.m0 = oracle::LogUniform(rng, 1, 200);
    p.alpha = oracle::Uniform(rng, 1.2, 8);
    const MarketParams mp{10.0, double(p.b), double(p.b)};
    const InfoTech tech{double(p.sigma), double(p.m0), double(p.alpha)};
    const double mi = tech.base_noise * oracle::LogUniform(rng, 1e-3, 0.99);
    const double mj = tech.base_noise * oracle::LogUniform(rng, 1e-3, 1);
    const Real h = 1e-4L * mi;
    const auto js = [&](Real m) { return oracle::SharingPayoff(m, mj, p); };
    const auto jn = [&](Real m) { return oracle::NonSharingPayoff(m, mj, p); };
    const Real ref_s = oracle::Derivative5(js, mi, h);
    const Real ref_n = oracle::Derivative5(jn, mi, h);
    // Relative to the investment term, which sets the marginal's scale.
    const double scale = 1.0 / (mi * std::log(double(p.alpha)));
    EXPECT_NEAR(MarginalSharing(mi, mj, mp, tech), double(ref_s), 1e-8 * scale);
    EXPECT_NEAR(MarginalNonSharing(mi, mj, mp, tech), double(ref_n),
                1e-8 * scale);
  }
}

TEST(SecondDerivativeTest, MatchesDifferencedMarginal) {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 1000; ++k) {
    const MarketParams mp{10.0, oracle::Uniform(rng, 0.2, 5), 0.0};
    const MarketParams params{mp.a, mp.b, mp.b};
    const InfoTech tech{oracle::LogUniform(rng, 0.1, 500),
                        oracle::LogUniform(rng, 1, 200),
                        oracle::Uniform(rng, 1.2, 8)};
    const double mi = tech.base_noise * oracle::LogUniform(rng, 1e-3, 0.99);
    const double mj = tech.base_noise * oracle::LogUniform(rng, 1e-3, 1);
    const double h = 1e-5 * mi;
    for (Regime regime : {Regime::kSharing, Regime::kNonSharing}) {
      const PayoffSurface s(regime, params, tech);
      const double fd = (s.Marginal(mi + h, mj) - s.Marginal(mi - h, mj)) / (2 * h);
      const double scale = 1.0 / (mi * mi * std::log(tech.efficacy));
      EXPECT_NEAR(s.SecondDerivative(mi, mj), fd, 1e-6 * scale);
    }
  }
}

// Picks b so that the first-order condition holds at (m_i, m_j); returns the
// b for the sharing regime.
double SharingFocSlope(double sigma, double m, double log_alpha) {
  const double k0 = 2 * sigma * m + m * m;
  return sigma * sigma * m * m * m * log_alpha / (9 * k0 * k0);
}

double NonSharingFocSlope(double sigma, double mi, double mj,
                          double log_alpha) {
  const auto h = MarginalHelpers::Compute(sigma, mi, mj);
  return sigma * sigma * h.f1 * h.f2 * mi * log_alpha;
}

TEST(SecondDerivativeTest, SharingSymmetricStationaryPointsAreMinima) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 1000; ++k) {
    const double sigma = oracle::LogUniform(rng, 0.1, 500);
    const double m = oracle::LogUniform(rng, 0.01, 200);
    const double alpha = oracle::Uniform(rng, 1.2, 8);
    const double b = SharingFocSlope(sigma, m, std::log(alpha));
    const MarketParams params{10.0, b, b};
    const InfoTech tech{sigma, m, alpha};
    ASSERT_NEAR(MarginalSharing(m, m, params, tech), 0.0,
                1e-10 / (m * std::log(alpha)));
    const double expected =
        sigma * sigma / (9 * b) / std::pow(2 * sigma + m, 3);
    const double soc = SecondDerivativeSharing(m, m, params, tech);
    EXPECT_GT(soc, 0.0);
    EXPECT_NEAR(soc, expected, 1e-7 * expected + 1e-9 / (m * m * std::log(alpha)));
  }
}

TEST(SecondDerivativeTest, NonSharingSymmetricStationaryPointsAreMaxima) {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 1000; ++k) {
    const double sigma = oracle::LogUniform(rng, 0.1, 500);
    const double m = sigma * oracle::Uniform(rng, 1e-3, 0.4999);  // sigma > 2m
    const double alpha = oracle::Uniform(rng, 1.2, 8);
    const double b = NonSharingFocSlope(sigma, m, m, std::log(alpha));
    const MarketParams params{10.0, b, b};
    const InfoTech tech{sigma, m, alpha};
    ASSERT_NEAR(MarginalNonSharing(m, m, params, tech), 0.0,
                1e-10 / (m * std::log(alpha)));
    EXPECT_LE(SecondDerivativeNonSharing(m, m, params, tech),
              1e-9 / (m * m * std::log(alpha)));
  }
}

TEST(SecondDerivativeTest, FreeRiderLocusStationaryPointsAreMaxima) {
  std::mt19937_64 rng(41);
  const double upper = (1 + std::sqrt(3.0)) / 4;
  for (int k = 0; k < 1000; ++k) {
    const double sigma = oracle::LogUniform(rng, 0.1, 500);
    const double mi = sigma * oracle::Uniform(rng, 1e-3, upper);
    const double mj = sigma * sigma / (4 * mi);
    const double alpha = oracle::Uniform(rng, 1.2, 8);
    const double xi = mi + sigma, xj = mj + sigma;
    EXPECT_LE(NonSharingCurvatureFactor(sigma, xi, xj), 1e-9 * xi * xi * xj * xj);
    const double b = NonSharingFocSlope(sigma, mi, mj, std::log(alpha));
    const MarketParams params{10.0, b, b};
    const InfoTech tech{sigma, std::max(mi, mj), alpha};
    EXPECT_LE(SecondDerivativeNonSharing(mi, mj, params, tech),
              1e-9 / (mi * mi * std::log(alpha)));
  }
}

TEST(MarginalTest, NonSharingMarginalDecreasesInRivalNoise) {
  const MarketParams params{10.0, 1.0, 1.0};
  const InfoTech tech{30.0, 50.0, 3.0};
  const auto grid = oracle::LogGrid(0.01, 50.0, 50);
  for (double mi : grid) {
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
      EXPECT_GT(MarginalNonSharing(mi, grid[k], params, tech),
                MarginalNonSharing(mi, grid[k + 1], params, tech));
    }
  }
}

TEST(MarginalHelpersTest, Invariants) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 500; ++k) {
    const double s = oracle::LogUniform(rng, 0.01, 100);
    const double mi = oracle::LogUniform(rng, 0.01, 100);
    const double mj = oracle::LogUniform(rng, 0.01, 100);
    const auto h = MarginalHelpers::Compute(s, mi, mj);
    EXPECT_GT(h.x_i, s);
    EXPECT_GT(h.x_j, s);
    EXPECT_GT(4 * h.x_i * h.x_j - s * s, 0.0);
    EXPECT_GT(h.f1, 1.0);
  }
}

TEST(PayoffSurfaceTest, DispatchesOnRegime) {
  const PayoffSurface sharing(Regime::kSharing, kParams, kTech);
  const PayoffSurface nonsharing(Regime::kNonSharing, kParams, kTech);
  EXPECT_EQ(sharing.Value(1.0, 2.0), PayoffSharing(1.0, 2.0, kParams, kTech));
  EXPECT_EQ(nonsharing.Marginal(1.0, 2.0),
            MarginalNonSharing(1.0, 2.0, kParams, kTech));
  EXPECT_EQ(nonsharing.SecondDerivative(1.0, 2.0),
            SecondDerivativeNonSharing(1.0, 2.0, kParams, kTech));
}

}  // namespace
}  // namespace cyberins
