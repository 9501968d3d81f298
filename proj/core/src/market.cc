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

#include "cyberins/market.h"

#include <string>

namespace cyberins {

namespace {

void RequirePositive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string("field '") + field +
                      "' must be a finite positive number");
  }
}

}  // namespace

void MarketParams::Validate() const {
  RequirePositive(a, "a");
  RequirePositive(b, "b");
  RequirePositive(d, "d");
}

void MarketParams::RequireIdenticalProducts() const {
  Validate();
  if (b != d) {
    throw DomainError("field 'd' must equal 'b' (identical products)");
  }
}

void InfoTech::Validate() const {
  RequirePositive(cost_variance, "sigma");
  RequirePositive(base_noise, "m0");
  if (!(efficacy > 1.0) || !std::isfinite(efficacy)) {
    throw DomainError("field 'alpha' must be a finite number greater than 1");
  }
}

double InvestmentCost(double noise, const InfoTech& tech) {
  if (!(noise > 0.0)) {
    throw DomainError("investment cost is infinite for noise variance <= 0");
  }
  if (noise > tech.base_noise) {
    throw DomainError("noise variance above m0 would need negative investment");
  }
  return std::log(tech.base_noise / noise) / tech.LogEfficacy();
}

double NoiseFromInvestment(double effort, const InfoTech& tech) {
  if (!(effort >= 0.0)) throw DomainError("investment must be non-negative");
  return tech.base_noise * std::exp(-effort * tech.LogEfficacy());
}

double Price(double q_i, double q_j, const MarketParams& params) {
  return params.a - params.b * q_i - params.d * q_j;
}

double RealizedProfit(double q_i, double q_j, double cost, double effort,
                      const MarketParams& params) {
  return q_i * Price(q_i, q_j, params) - q_i * cost - effort;
}

}  // namespace cyberins
