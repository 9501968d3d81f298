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

#include "cli_config.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace cyberins::cli {

namespace {

int RequireInt(const nlohmann::json& obj, const std::string& key,
               const std::string& path, int fallback) {
  const auto it = obj.find(key);
  const std::string name = path + "." + key;
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) throw ScenarioError(name, "must be an integer");
  const auto value = it->get<std::int64_t>();
  if (value < std::numeric_limits<int>::min() ||
      value > std::numeric_limits<int>::max()) {
    throw ScenarioError(name, "out of range");
  }
  return static_cast<int>(value);
}

std::uint64_t RequireCount(const nlohmann::json& obj, const std::string& key,
                           const std::string& path, std::uint64_t fallback) {
  const auto it = obj.find(key);
  const std::string name = path + "." + key;
  if (it == obj.end()) return fallback;
  if (it->is_number_unsigned()) return it->get<std::uint64_t>();
  if (it->is_number_integer() && it->get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(it->get<std::int64_t>());
  }
  // 1e6 written as a float is accepted when it is a whole number.
  if (it->is_number_float()) {
    const double v = it->get<double>();
    if (v >= 0.0 && v < 1.8e19 && std::floor(v) == v) {
      return static_cast<std::uint64_t>(v);
    }
  }
  throw ScenarioError(name, "must be a non-negative integer");
}

bool RequireBool(const nlohmann::json& obj, const std::string& key,
                 const std::string& path, bool fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) throw ScenarioError(path + "." + key, "must be a bool");
  return it->get<bool>();
}

std::optional<double> OptionalNumber(const nlohmann::json& obj,
                                     const std::string& key,
                                     const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return RequireNumber(obj, key, path);
}

const nlohmann::json& Section(const nlohmann::json& doc,
                              const std::string& name) {
  static const nlohmann::json kEmpty = nlohmann::json::object();
  const auto it = doc.find(name);
  if (it == doc.end()) return kEmpty;
  if (!it->is_object()) throw ScenarioError(name, "must be an object");
  return *it;
}

std::vector<PayoffPoint> ParsePoints(const nlohmann::json& section,
                                     const InfoTech& tech, bool has_point) {
  RejectUnknownKeys(section, {"points"}, "payoff");
  std::vector<PayoffPoint> points;
  const auto it = section.find("points");
  if (it == section.end()) {
    if (has_point) points.push_back({tech.base_noise, tech.base_noise});
    return points;
  }
  if (!it->is_array()) throw ScenarioError("payoff.points", "must be an array");
  for (std::size_t k = 0; k < it->size(); ++k) {
    const std::string path = "payoff.points[" + std::to_string(k) + "]";
    const auto& entry = (*it)[k];
    RejectUnknownKeys(entry, {"m_i", "m_j"}, path);
    PayoffPoint p{RequireNumber(entry, "m_i", path),
                  RequireNumber(entry, "m_j", path)};
    for (const auto& [name, m] : {std::pair{"m_i", p.m_i}, {"m_j", p.m_j}}) {
      if (!(m >= tech.MinNoise() && m <= tech.base_noise)) {
        throw ScenarioError(path + "." + name, "must lie in (0, m0]");
      }
    }
    points.push_back(p);
  }
  return points;
}

RegionConfig ParseRegions(const nlohmann::json& section, std::string& regime) {
  RejectUnknownKeys(section,
                    {"sigma_min", "sigma_max", "m0_min", "m0_max",
                     "sigma_points", "m0_points", "linear", "regime"},
                    "regions");
  RegionConfig rc;
  rc.sigma_min = RequireNumber(section, "sigma_min", "regions", rc.sigma_min);
  rc.sigma_max = RequireNumber(section, "sigma_max", "regions", rc.sigma_max);
  rc.m0_min = RequireNumber(section, "m0_min", "regions", rc.m0_min);
  rc.m0_max = RequireNumber(section, "m0_max", "regions", rc.m0_max);
  rc.sigma_points =
      RequireInt(section, "sigma_points", "regions", rc.sigma_points);
  rc.m0_points = RequireInt(section, "m0_points", "regions", rc.m0_points);
  rc.linear = RequireBool(section, "linear", "regions", rc.linear);
  if (const auto it = section.find("regime"); it != section.end()) {
    if (!it->is_string() ||
        (*it != "both" && *it != "sharing" && *it != "nonsharing")) {
      throw ScenarioError("regions.regime",
                          "must be \"both\", \"sharing\" or \"nonsharing\"");
    }
    regime = it->get<std::string>();
  }
  try {
    rc.Validate();
  } catch (const DomainError& e) {
    throw ScenarioError("regions", e.what());
  }
  // 10^6 cells is far beyond any figure and keeps memory bounded.
  if (static_cast<double>(rc.sigma_points) * rc.m0_points > 1e6) {
    throw ScenarioError("regions", "resolution above 10^6 cells");
  }
  return rc;
}

SimulateConfig ParseSimulate(const nlohmann::json& section,
                             const InfoTech& tech, bool has_point) {
  RejectUnknownKeys(section, {"n", "seed", "m_i", "m_j", "tail"}, "simulate");
  SimulateConfig sc;
  sc.n = RequireCount(section, "n", "simulate", sc.n);
  sc.seed = RequireCount(section, "seed", "simulate", sc.seed);
  sc.m_i = OptionalNumber(section, "m_i", "simulate");
  sc.m_j = OptionalNumber(section, "m_j", "simulate");
  if (sc.n < 10000) throw ScenarioError("simulate.n", "must be >= 10000");
  if (has_point) {
    for (const auto& [name, m] : {std::pair{"m_i", sc.m_i}, {"m_j", sc.m_j}}) {
      if (m && !(*m >= tech.MinNoise() && *m <= tech.base_noise)) {
        throw ScenarioError(std::string("simulate.") + name,
                            "must lie in (0, m0]");
      }
    }
  }
  if (const auto it = section.find("tail"); it != section.end()) {
    const std::string path = "simulate.tail";
    if (!it->is_object()) throw ScenarioError(path, "must be an object");
    RejectUnknownKeys(*it, {"w2", "xi", "x0", "beta", "n", "deviation_points"},
                      path);
    TailConfig tc;
    tc.tail_weight = RequireNumber(*it, "w2", path, tc.tail_weight);
    tc.shape = RequireNumber(*it, "xi", path, tc.shape);
    tc.threshold = OptionalNumber(*it, "x0", path);
    tc.scale = OptionalNumber(*it, "beta", path);
    tc.n = RequireCount(*it, "n", path, tc.n);
    tc.deviation_points =
        RequireInt(*it, "deviation_points", path, tc.deviation_points);
    if (!(tc.tail_weight >= 0.0 && tc.tail_weight <= 1.0)) {
      throw ScenarioError(path + ".w2", "must lie in [0, 1]");
    }
    if (!(tc.shape < 0.5)) {
      throw ScenarioError(path + ".xi", "must be below 0.5 (finite variance)");
    }
    if (tc.scale && !(*tc.scale > 0.0)) {
      throw ScenarioError(path + ".beta", "must be positive");
    }
    if (tc.n < 100000) throw ScenarioError(path + ".n", "must be >= 100000");
    if (tc.deviation_points < 0 || tc.deviation_points > 1000) {
      throw ScenarioError(path + ".deviation_points", "must lie in [0, 1000]");
    }
    sc.tail = tc;
  }
  return sc;
}

}  // namespace

void ApplyOverride(nlohmann::json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ScenarioError(assignment, "override must look like key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  nlohmann::json value = nlohmann::json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;

  nlohmann::json* node = &doc;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (part.empty()) throw ScenarioError(key, "empty key segment");
    if (!node->is_object()) {
      throw ScenarioError(key.substr(0, start ? start - 1 : 0),
                          "is not an object");
    }
    if (dot == std::string::npos) {
      (*node)[part] = value;
      return;
    }
    node = &(*node)[part];
    if (node->is_null()) *node = nlohmann::json::object();
    start = dot + 1;
  }
}

nlohmann::json LoadDocument(const std::string& path,
                            const std::vector<std::string>& overrides,
                            nlohmann::json base) {
  nlohmann::json doc = std::move(base);
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("--config", "cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto parsed = nlohmann::json::parse(buffer.str(), nullptr, false);
    if (parsed.is_discarded()) {
      throw ScenarioError("--config", "'" + path + "' is not valid JSON");
    }
    if (!parsed.is_object()) {
      throw ScenarioError("--config", "top level must be an object");
    }
    doc.update(parsed);
  }
  for (const auto& assignment : overrides) ApplyOverride(doc, assignment);
  return doc;
}

ScenarioConfig ParseConfig(const nlohmann::json& doc, bool require_point) {
  ScenarioConfig config;
  config.scenario = ParseScenario(
      doc, {"payoff", "equilibrium", "regions", "simulate"}, require_point);
  const auto& tech = config.scenario.tech;
  const bool has_point = config.scenario.has_point;
  config.payoff_points = ParsePoints(Section(doc, "payoff"), tech, has_point);

  const auto& eq = Section(doc, "equilibrium");
  RejectUnknownKeys(eq, {"verify_grid"}, "equilibrium");
  config.verify_grid = RequireInt(eq, "verify_grid", "equilibrium", 0);
  if (config.verify_grid != 0 &&
      (config.verify_grid < 50 || config.verify_grid > 5000)) {
    throw ScenarioError("equilibrium.verify_grid",
                        "must be 0 or lie in [50, 5000]");
  }

  config.regions = ParseRegions(Section(doc, "regions"), config.regions_regime);
  config.simulate = ParseSimulate(Section(doc, "simulate"), tech, has_point);
  return config;
}

TailMixture MakeMixture(const TailConfig& tail, double sigma) {
  TailMixture mix = TailMixture::Continuous(sigma, tail.tail_weight,
                                            tail.shape, tail.threshold);
  if (tail.scale) mix.scale = *tail.scale;
  mix.Validate();
  return mix;
}

}  // namespace cyberins::cli
