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

#ifndef CYBERINS_TOOLS_CLI_CONFIG_H_
#define CYBERINS_TOOLS_CLI_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyberins/regions.h"
#include "cyberins/scenario.h"
#include "cyberins/tailsim.h"

namespace cyberins::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitIo = 4;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads the --config file (or starts from `base` when path is empty) and
// applies "key=value" overrides. Dotted keys address nested objects; values
// parse as JSON and fall back to plain strings.
nlohmann::json LoadDocument(const std::string& path,
                            const std::vector<std::string>& overrides,
                            nlohmann::json base = nlohmann::json::object());

void ApplyOverride(nlohmann::json& doc, const std::string& assignment);

struct PayoffPoint {
  double m_i = 0.0;
  double m_j = 0.0;
};

struct TailConfig {
  double tail_weight = 0.05;
  double shape = 0.25;
  std::optional<double> threshold;  // default 2 sqrt(sigma)
  std::optional<double> scale;      // default: continuous density at x0
  std::size_t n = 200000;
  int deviation_points = 8;
};

struct SimulateConfig {
  std::size_t n = 1000000;
  std::uint64_t seed = 42;
  std::optional<double> m_i;  // default m0
  std::optional<double> m_j;
  std::optional<TailConfig> tail;
};

struct ScenarioConfig {
  Scenario scenario;
  std::vector<PayoffPoint> payoff_points;
  int verify_grid = 0;
  RegionConfig regions;
  std::string regions_regime = "both";
  SimulateConfig simulate;
};

// `require_point` is false for commands that sweep sigma and m0.
ScenarioConfig ParseConfig(const nlohmann::json& doc, bool require_point);

TailMixture MakeMixture(const TailConfig& tail, double sigma);

}  // namespace cyberins::cli

#endif  // CYBERINS_TOOLS_CLI_CONFIG_H_
