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

#include "benchmark/benchmark.h"
#include "cyberins/equilibrium.h"
#include "cyberins/payoff.h"
#include "cyberins/regions.h"
#include "cyberins/tailsim.h"

namespace cyberins {
namespace {

const MarketParams kUnit{10.0, 1.0, 1.0};

double M0() { return 54.0 / std::log(3.0); }

void BM_PayoffValue(benchmark::State& state) {
  const auto regime = static_cast<Regime>(state.range(0));
  const PayoffSurface s(regime, kUnit, {30.0, M0(), 3.0});
  double m = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.Value(m, 7.0));
    m = m < 40.0 ? m * 1.001 : 1.0;
  }
}
BENCHMARK(BM_PayoffValue)->Arg(0)->Arg(1);

void BM_BestResponse(benchmark::State& state) {
  const auto regime = static_cast<Regime>(state.range(0));
  const InfoTech tech{30.0, M0(), 3.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(BestResponse(5.0, regime, kUnit, tech));
  }
}
BENCHMARK(BM_BestResponse)->Arg(0)->Arg(1);

void BM_Classify(benchmark::State& state) {
  const auto regime = static_cast<Regime>(state.range(0));
  const InfoTech tech{131.2, M0(), 3.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(Classify(regime, kUnit, tech));
  }
}
BENCHMARK(BM_Classify)->Arg(0)->Arg(1);

void BM_BruteForce(benchmark::State& state) {
  const InfoTech tech{30.0, M0(), 3.0};
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        BruteForceNe(Regime::kNonSharing, kUnit, tech, points));
  }
}
BENCHMARK(BM_BruteForce)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_RegimeComparison(benchmark::State& state) {
  RegionConfig config;
  config.sigma_points = config.m0_points = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RegimeComparison(config, kUnit, 3.0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_RegimeComparison)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Stage2Simulation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SimulateStage2({2.0, 2.0, Regime::kSharing}, kUnit,
                                            {4.0, 2.0, 3.0}, n, 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Stage2Simulation)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cyberins

BENCHMARK_MAIN();
