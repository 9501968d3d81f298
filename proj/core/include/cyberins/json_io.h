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

#ifndef CYBERINS_JSON_IO_H_
#define CYBERINS_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "cyberins/equilibrium.h"
#include "cyberins/market.h"
#include "cyberins/regions.h"
#include "cyberins/tailsim.h"

// JSON views of the library's result types. Key order is fixed (ordered_json)
// so dumps are byte-stable.

namespace cyberins {

using Json = nlohmann::ordered_json;

Json ToJson(const MarketParams& params);
Json ToJson(const InfoTech& tech);
Json ToJson(const StrategyProfile& profile);
Json ToJson(const SharingThresholds& th);
Json ToJson(const NonSharingThresholds& th);
Json ToJson(const FeasibilityCertificate& cert);
Json ToJson(const NashCandidate& candidate);
Json ToJson(const BruteForceResult& result);
Json ToJson(const EquilibriumReport& report);
Json ToJson(const EpsilonNeResult& result);
Json ToJson(const ExclusionResult& result);
Json ToJson(const TailMixture& mix);
Json ToJson(const SimulationResult& result);
Json ToJson(const EpsilonBounds& bounds);
Json ToJson(const RegionSummary& summary);

// Both regimes' thresholds under one object; absent thresholds are null.
Json ThresholdsJson(const MarketParams& params, const InfoTech& tech);

}  // namespace cyberins

#endif  // CYBERINS_JSON_IO_H_
