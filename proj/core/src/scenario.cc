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

#include "cyberins/scenario.h"

#include <algorithm>
#include <cmath>

namespace cyberins {

namespace {

std::string Join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

// Re-raises a DomainError from a Validate() call under the scenario field
// that caused it. Validate messages start with the field name in quotes.
template <typename Fn>
void ValidateAs(const Fn& fn, const std::vector<std::string>& fields) {
  try {
    fn();
  } catch (const DomainError& e) {
    const std::string what = e.what();
    for (const auto& f : fields) {
      if (what.find("'" + f + "'") != std::string::npos) {
        throw ScenarioError(f, what, false);
      }
    }
    throw ScenarioError(fields.front(), what, false);
  }
}

}  // namespace

double RequireNumber(const nlohmann::json& obj, const std::string& key,
                     const std::string& path, std::optional<double> fallback) {
  const std::string name = Join(path, key);
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (fallback) return *fallback;
    throw ScenarioError(name, "missing");
  }
  if (!it->is_number()) throw ScenarioError(name, "must be a number");
  const double value = it->get<double>();
  if (!std::isfinite(value)) throw ScenarioError(name, "must be finite");
  return value;
}

void RejectUnknownKeys(const nlohmann::json& obj,
                       const std::vector<std::string>& allowed,
                       const std::string& path) {
  if (!obj.is_object()) {
    throw ScenarioError(path.empty() ? "<root>" : path, "must be an object");
  }
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) ==
        allowed.end()) {
      throw ScenarioError(Join(path, item.key()), "unknown key");
    }
  }
}

Scenario ParseScenario(const nlohmann::json& doc,
                       const std::vector<std::string>& sections,
                       bool require_point) {
  std::vector<std::string> allowed = {"a",  "b",     "d",     "sigma",
                                      "m0", "alpha", "regime"};
  allowed.insert(allowed.end(), sections.begin(), sections.end());
  RejectUnknownKeys(doc, allowed, "");

  Scenario s;
  s.market.a = RequireNumber(doc, "a", "");
  s.market.b = RequireNumber(doc, "b", "");
  s.market.d = RequireNumber(doc, "d", "");
  s.tech.efficacy = RequireNumber(doc, "alpha", "");
  const bool has_sigma = doc.contains("sigma");
  const bool has_m0 = doc.contains("m0");
  if (require_point || has_sigma || has_m0) {
    s.tech.cost_variance = RequireNumber(doc, "sigma", "");
    s.tech.base_noise = RequireNumber(doc, "m0", "");
    s.has_point = true;
  }
  if (const auto it = doc.find("regime"); it != doc.end()) {
    if (!it->is_string()) throw ScenarioError("regime", "must be a string");
    try {
      s.regime = ParseRegime(it->get<std::string>());
    } catch (const DomainError& e) {
      throw ScenarioError("regime", e.what());
    }
  }
  ValidateAs([&] { s.market.Validate(); }, {"a", "b", "d"});
  ValidateAs([&] { s.market.RequireIdenticalProducts(); }, {"d"});
  if (s.has_point) {
    ValidateAs([&] { s.tech.Validate(); }, {"sigma", "m0", "alpha"});
  } else if (!(s.tech.efficacy > 1.0)) {
    throw ScenarioError("alpha", "must exceed 1");
  }
  return s;
}

}  // namespace cyberins
