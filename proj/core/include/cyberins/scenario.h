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

#ifndef CYBERINS_SCENARIO_H_
#define CYBERINS_SCENARIO_H_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyberins/market.h"

namespace cyberins {

// A scenario file names the market and the information technology with flat
// keys a, b, d, sigma, m0, alpha (all numbers) and an optional "regime".
struct Scenario {
  MarketParams market;
  InfoTech tech;
  Regime regime = Regime::kSharing;
  bool has_point = false;  // sigma and m0 were given
};

// Thrown for malformed scenarios; what() names the offending field.
class ScenarioError : public DomainError {
 public:
  ScenarioError(const std::string& field, const std::string& message,
                bool prefixed = true)
      : DomainError(prefixed ? "field '" + field + "': " + message : message),
        field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// `sections` lists the other top-level keys the caller handles itself; any
// other unknown key is rejected. When `require_point` is false, sigma and m0
// may be absent (commands that sweep them).
Scenario ParseScenario(const nlohmann::json& doc,
                       const std::vector<std::string>& sections,
                       bool require_point = true);

// Reads a number, rejecting other JSON types. Missing keys give `fallback` or,
// without one, a "missing" error.
double RequireNumber(const nlohmann::json& obj, const std::string& key,
                     const std::string& path,
                     std::optional<double> fallback = std::nullopt);

// Rejects any key of `obj` not in `allowed`.
void RejectUnknownKeys(const nlohmann::json& obj,
                       const std::vector<std::string>& allowed,
                       const std::string& path);

}  // namespace cyberins

#endif  // CYBERINS_SCENARIO_H_
