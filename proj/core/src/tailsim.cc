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

#include "cyberins/tailsim.h"

#include <algorithm>
#include <array>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <random>

#include "cyberins/estimation.h"
#include "cyberins/payoff.h"
#include "cyberins/production.h"

namespace cyberins {

namespace {

// Work is split into a fixed number of shards, each with its own engine, so
// the draws do not depend on how many threads run them.
constexpr std::size_t kShards = 64;

std::mt19937_64 ShardEngine(std::uint64_t seed, std::size_t shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard), 0x5eedu};
  return std::mt19937_64(seq);
}

std::size_t ShardBegin(std::size_t n, std::size_t shard) {
  return n / kShards * shard + std::min(shard, n % kShards);
}

// Running mean and sum of squared deviations.
struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void Add(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  void Merge(const Moments& other) {
    if (other.count == 0.0) return;
    const double total = count + other.count;
    const double delta = other.mean - mean;
    mean += delta * other.count / total;
    m2 += other.m2 + delta * delta * count * other.count / total;
    count = total;
  }

  double Variance() const { return count > 1.0 ? m2 / (count - 1.0) : 0.0; }
};

struct ShardStats {
  Moments profit;
  Moments quantity;
  std::size_t negative_quantity = 0;
  std::size_t negative_price = 0;
};

struct Outcome {
  double profit;
  double quantity;
  double price;
};

// Standard-normal draws are scaled per use, so two calls with the same seed
// share their random numbers across different noise levels.
struct StandardDraws {
  double cost_uniform;
  double cost_choice;
  double z_cost;
  double z_i;
  double z_j;
};

template <typename Step>
SimulationResult Accumulate(std::size_t n, std::uint64_t seed,
                            const Step& step) {
  std::array<ShardStats, kShards> shards{};
  ParallelFor(kShards, [&](std::size_t shard) {
    auto engine = ShardEngine(seed, shard);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    ShardStats& stats = shards[shard];
    const std::size_t count = ShardBegin(n, shard + 1) - ShardBegin(n, shard);
    for (std::size_t k = 0; k < count; ++k) {
      StandardDraws draws;
      draws.cost_uniform = uniform(engine);
      draws.cost_choice = uniform(engine);
      draws.z_cost = normal(engine);
      draws.z_i = normal(engine);
      draws.z_j = normal(engine);
      const Outcome out = step(draws);
      stats.profit.Add(out.profit);
      stats.quantity.Add(out.quantity);
      stats.negative_quantity += out.quantity < 0.0 ? 1 : 0;
      stats.negative_price += out.price < 0.0 ? 1 : 0;
    }
  });
  ShardStats total;
  for (const auto& s : shards) {
    total.profit.Merge(s.profit);
    total.quantity.Merge(s.quantity);
    total.negative_quantity += s.negative_quantity;
    total.negative_price += s.negative_price;
  }
  SimulationResult result;
  result.n = n;
  result.seed = seed;
  result.mean_profit = total.profit.mean;
  result.profit_std_error =
      std::sqrt(total.profit.Variance() / static_cast<double>(n));
  result.mean_quantity = total.quantity.mean;
  result.quantity_variance = total.quantity.Variance();
  result.negative_quantity_fraction =
      static_cast<double>(total.negative_quantity) / static_cast<double>(n);
  result.negative_price_fraction =
      static_cast<double>(total.negative_price) / static_cast<double>(n);
  return result;
}

double GpdQuantile(double u, double threshold, double scale, double shape) {
  const double log_survival = std::log1p(-u);
  if (shape == 0.0) return threshold - scale * log_survival;
  return threshold + scale * std::expm1(-shape * log_survival) / shape;
}

// Draw from the mixture given two uniforms and a standard normal.
double MixtureDraw(const TailMixture& mix, const StandardDraws& d) {
  const double sd = std::sqrt(mix.body_variance);
  if (d.cost_choice < mix.body_weight || !mix.truncated()) {
    if (!mix.truncated()) return sd * d.z_cost;
    const boost::math::normal_distribution<double> unit;
    const double top = boost::math::cdf(unit, mix.threshold / sd);
    double p = d.cost_uniform * top;
    p = std::clamp(p, std::numeric_limits<double>::min(), top);
    return sd * boost::math::quantile(unit, p);
  }
  return GpdQuantile(d.cost_uniform, mix.threshold, mix.scale, mix.shape);
}

// Quantities of both insurers given the realized signals.
struct Quantities {
  double q_i;
  double q_j;
};

Quantities NormalRule(const StrategyProfile& profile, const MarketParams& params,
                      double sigma, double signal_i, double signal_j) {
  if (profile.regime == Regime::kSharing) {
    const double estimate =
        PooledEstimate(signal_i, signal_j, sigma, profile.m_i, profile.m_j);
    const double q = SharingQuantity(estimate, params);
    return {q, q};
  }
  // Rules are recomputed per call; callers hoist them when it matters.
  const auto rule_i =
      NonSharingCoefficients(sigma, profile.m_i, profile.m_j, params);
  const auto rule_j =
      NonSharingCoefficients(sigma, profile.m_j, profile.m_i, params);
  return {rule_i(signal_i), rule_j(signal_j)};
}

}  // namespace

void TailMixture::Validate() const {
  if (!(body_weight >= 0.0) || !(tail_weight >= 0.0) ||
      std::abs(body_weight + tail_weight - 1.0) > 1e-12) {
    throw DomainError("mixture weights must be non-negative and sum to 1");
  }
  if (!(body_variance > 0.0)) {
    throw DomainError("body variance must be positive");
  }
  if (!(shape < 0.5)) {
    throw DomainError("tail shape must be below 1/2 for a finite variance");
  }
  if (truncated() && !(scale > 0.0)) {
    throw DomainError("tail scale must be positive");
  }
  if (!std::isfinite(threshold)) throw DomainError("threshold must be finite");
}

double TailMixture::BodyMean() const {
  if (!truncated()) return 0.0;
  const double sd = std::sqrt(body_variance);
  const boost::math::normal_distribution<double> unit;
  const double z = threshold / sd;
  return -sd * boost::math::pdf(unit, z) / boost::math::cdf(unit, z);
}

double TailMixture::TailMean() const {
  return threshold + scale / (1.0 - shape);
}

double TailMixture::Mean() const {
  if (!truncated()) return 0.0;
  return body_weight * BodyMean() + tail_weight * TailMean();
}

double TailMixture::Variance() const {
  if (!truncated()) return body_variance;
  const double sd = std::sqrt(body_variance);
  const boost::math::normal_distribution<double> unit;
  const double z = threshold / sd;
  const double body_second =
      body_variance *
      (1.0 - z * boost::math::pdf(unit, z) / boost::math::cdf(unit, z));
  const double tail_var = scale * scale / ((1.0 - shape) * (1.0 - shape) *
                                           (1.0 - 2.0 * shape));
  const double tail_mean = TailMean();
  const double second = body_weight * body_second +
                        tail_weight * (tail_var + tail_mean * tail_mean);
  const double mean = Mean();
  return second - mean * mean;
}

TailMixture TailMixture::Continuous(double body_variance, double tail_weight,
                                    double shape,
                                    std::optional<double> threshold) {
  TailMixture mix;
  mix.body_variance = body_variance;
  mix.tail_weight = tail_weight;
  mix.body_weight = 1.0 - tail_weight;
  mix.shape = shape;
  mix.threshold = threshold.value_or(2.0 * std::sqrt(body_variance));
  if (tail_weight > 0.0 && mix.body_weight > 0.0) {
    const double sd = std::sqrt(body_variance);
    const boost::math::normal_distribution<double> unit;
    const double z = mix.threshold / sd;
    const double body_density =
        boost::math::pdf(unit, z) / (sd * boost::math::cdf(unit, z));
    mix.scale = tail_weight / (mix.body_weight * body_density);
  } else {
    mix.scale = 1.0;
  }
  mix.Validate();
  return mix;
}

SimulationResult SimulateStage2(const StrategyProfile& profile,
                                const MarketParams& params,
                                const InfoTech& tech, std::size_t n,
                                std::uint64_t seed) {
  if (n < 10000) throw DomainError("simulation needs n >= 10^4");
  params.RequireIdenticalProducts();
  tech.Validate();
  const double sigma = tech.cost_variance;
  const double effort = InvestmentCost(profile.m_i, tech);
  InvestmentCost(profile.m_j, tech);  // domain check
  const double sd_cost = std::sqrt(sigma);
  const double sd_i = std::sqrt(profile.m_i);
  const double sd_j = std::sqrt(profile.m_j);
  const auto rule_i = NonSharingCoefficients(sigma, profile.m_i, profile.m_j,
                                             params);
  const auto rule_j = NonSharingCoefficients(sigma, profile.m_j, profile.m_i,
                                             params);
  const auto weights = EstimatorWeights::Compute(sigma, profile.m_i,
                                                 profile.m_j);

  auto result = Accumulate(n, seed, [&](const StandardDraws& d) {
    const double cost = sd_cost * d.z_cost;
    const double signal_i = cost + sd_i * d.z_i;
    const double signal_j = cost + sd_j * d.z_j;
    double q_i;
    double q_j;
    if (profile.regime == Regime::kSharing) {
      const double estimate = weights.k_i * signal_i + weights.k_j * signal_j;
      q_i = q_j = SharingQuantity(estimate, params);
    } else {
      q_i = rule_i(signal_i);
      q_j = rule_j(signal_j);
    }
    return Outcome{RealizedProfit(q_i, q_j, cost, effort, params), q_i,
                   Price(q_i, q_j, params)};
  });
  result.profile = profile;
  return result;
}

std::vector<double> SampleTailMixture(const TailMixture& mix, std::size_t n,
                                      std::uint64_t seed) {
  mix.Validate();
  std::vector<double> draws(n);
  ParallelFor(kShards, [&](std::size_t shard) {
    auto engine = ShardEngine(seed, shard);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (std::size_t k = ShardBegin(n, shard); k < ShardBegin(n, shard + 1);
         ++k) {
      StandardDraws d{};
      d.cost_uniform = uniform(engine);
      d.cost_choice = uniform(engine);
      d.z_cost = normal(engine);
      draws[k] = MixtureDraw(mix, d);
    }
  });
  return draws;
}

double TailAdjustment(double eps_i, double eps_j, const MarketParams& params) {
  if (!(params.b > 0.0)) throw DomainError("field 'b' must be positive");
  return (2.0 * eps_i + eps_j) / (3.0 * params.b);
}

EpsilonBounds TailPayoffBounds(const StrategyProfile& profile,
                               const MarketParams& params,
                               const InfoTech& tech, const TailMixture& mix,
                               std::size_t n, std::uint64_t seed,
                               int deviation_points) {
  if (n < 100000) throw DomainError("tail bounds need n >= 10^5");
  if (deviation_points < 0) throw DomainError("deviation count is negative");
  mix.Validate();
  params.RequireIdenticalProducts();
  tech.Validate();
  const PayoffSurface normal_surface(profile.regime, params, tech);
  const double m0 = tech.base_noise;
  const double sigma = tech.cost_variance;

  EpsilonBounds bounds;
  bounds.n = n;
  bounds.seed = seed;
  const double tail_eps = mix.TailContribution();
  bounds.tail_adjustment = TailAdjustment(tail_eps, tail_eps, params);

  std::vector<StrategyProfile> points = {profile, profile.Mirrored()};
  for (int k = 0; k < deviation_points; ++k) {
    const double t =
        deviation_points == 1 ? 1.0 : static_cast<double>(k) / (deviation_points - 1);
    const double d = 0.01 * m0 * std::pow(100.0, t);
    points.push_back({d, profile.m_j, profile.regime});
    points.push_back({d, profile.m_i, profile.regime});
  }

  for (const auto& point : points) {
    const double effort = InvestmentCost(point.m_i, tech);
    const double sd_i = std::sqrt(point.m_i);
    const double sd_j = std::sqrt(point.m_j);
    const double shift = bounds.tail_adjustment;
    auto sim = Accumulate(n, seed, [&](const StandardDraws& d) {
      const double cost = MixtureDraw(mix, d);
      const double signal_i = cost + sd_i * d.z_i;
      const double signal_j = cost + sd_j * d.z_j;
      const auto q = NormalRule(point, params, sigma, signal_i, signal_j);
      const double q_i = q.q_i - shift;
      const double q_j = q.q_j - shift;
      return Outcome{RealizedProfit(q_i, q_j, cost, effort, params), q_i,
                     Price(q_i, q_j, params)};
    });
    TailPoint tp;
    tp.profile = point;
    tp.normal_payoff = normal_surface.Value(point.m_i, point.m_j);
    tp.mixture_payoff = sim.mean_profit;
    tp.std_error = sim.profit_std_error;
    bounds.phi_lower =
        std::max(bounds.phi_lower,
                 std::max(0.0, tp.normal_payoff - tp.mixture_payoff) +
                     3.0 * tp.std_error);
    bounds.phi_upper =
        std::max(bounds.phi_upper,
                 std::max(0.0, tp.mixture_payoff - tp.normal_payoff) +
                     3.0 * tp.std_error);
    bounds.points.push_back(tp);
  }
  bounds.epsilon = bounds.phi_lower + bounds.phi_upper;

  // points[0] is the profile for insurer i, points[1] for insurer j; the
  // deviations alternate i, j after that.
  bounds.mixture_max_gain = 0.0;
  for (std::size_t k = 2; k < bounds.points.size(); ++k) {
    const double base = bounds.points[(k % 2 == 0) ? 0 : 1].mixture_payoff;
    bounds.mixture_max_gain =
        std::max(bounds.mixture_max_gain, bounds.points[k].mixture_payoff - base);
  }
  return bounds;
}

}  // namespace cyberins
