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

#include "commands.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "cyberins/equilibrium.h"
#include "cyberins/estimation.h"
#include "cyberins/json_io.h"
#include "cyberins/payoff.h"
#include "cyberins/production.h"
#include "cyberins/regions.h"
#include "cyberins/tailsim.h"

namespace cyberins::cli {

namespace fs = std::filesystem;

namespace {

std::string Num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'");
  }
}

// Writes the whole file at once; a partially written file is an I/O error.
void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void WriteJson(const fs::path& path, const Json& doc) {
  WriteFile(path, doc.dump(2) + "\n");
}

Json ScenarioJson(const Scenario& s) {
  Json out;
  out["market"] = ToJson(s.market);
  if (s.has_point) {
    out["info"] = ToJson(s.tech);
  } else {
    out["info"] = {{"alpha", s.tech.efficacy}};
  }
  out["regime"] = std::string(RegimeName(s.regime));
  return out;
}

Json PointJson(const PayoffPoint& p, const MarketParams& params,
               const InfoTech& tech) {
  const double sigma = tech.cost_variance;
  Json out;
  out["m_i"] = p.m_i;
  out["m_j"] = p.m_j;
  out["investment_i"] = InvestmentCost(p.m_i, tech);
  for (Regime regime : {Regime::kSharing, Regime::kNonSharing}) {
    const PayoffSurface surface(regime, params, tech);
    out[std::string(RegimeName(regime))] = {
        {"payoff", surface.Value(p.m_i, p.m_j)},
        {"marginal", surface.Marginal(p.m_i, p.m_j)},
        {"second_derivative", surface.SecondDerivative(p.m_i, p.m_j)}};
  }
  const auto rule = NonSharingCoefficients(sigma, p.m_i, p.m_j, params);
  out["estimation"] = {
      {"shrinkage_i", ShrinkageWeight(sigma, p.m_i)},
      {"pooled_variance", PooledVariance(sigma, p.m_i, p.m_j)},
      {"posterior_variance_one_signal", PosteriorVariance(sigma, p.m_i)},
      {"posterior_variance_two_signals",
       PosteriorVariance(sigma, p.m_i, p.m_j)}};
  out["nonsharing_rule"] = {{"alpha0", rule.intercept},
                            {"alpha1", rule.loading}};
  return out;
}

void WriteCsvRows(std::ostringstream& out,
                  const std::vector<std::vector<double>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ',';
      out << Num(row[k]);
    }
    out << '\n';
  }
}

double NormalPdf(double x, double mean, double variance) {
  const double z = x - mean;
  return std::exp(-0.5 * z * z / variance) /
         std::sqrt(2.0 * std::numbers::pi * variance);
}

std::vector<double> LogSpace(double lo, double hi, int points) {
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    out[static_cast<std::size_t>(k)] =
        lo * std::pow(hi / lo, static_cast<double>(k) / (points - 1));
  }
  out.back() = hi;
  return out;
}

std::string RegionCsv(const RegionGrid& grid) {
  std::ostringstream out;
  WriteRegionCsv(grid, out);
  return out.str();
}

Json RegionConfigJson(const RegionConfig& rc) {
  return {{"sigma_min", rc.sigma_min},       {"sigma_max", rc.sigma_max},
          {"m0_min", rc.m0_min},             {"m0_max", rc.m0_max},
          {"sigma_points", rc.sigma_points}, {"m0_points", rc.m0_points},
          {"linear", rc.linear}};
}

}  // namespace

int RunPayoff(const ScenarioConfig& config, const fs::path& out_dir,
              std::ostream& log) {
  const auto& s = config.scenario;
  Json doc;
  doc["scenario"] = ScenarioJson(s);
  doc["thresholds"] = ThresholdsJson(s.market, s.tech);
  Json points = Json::array();
  for (const auto& p : config.payoff_points) {
    points.push_back(PointJson(p, s.market, s.tech));
  }
  doc["points"] = points;
  EnsureDir(out_dir);
  WriteJson(out_dir / "payoff.json", doc);
  log << "payoff: " << config.payoff_points.size() << " point(s) -> "
      << (out_dir / "payoff.json").string() << '\n';
  return kExitOk;
}

int RunEquilibrium(const ScenarioConfig& config, const fs::path& out_dir,
                   std::ostream& log) {
  const auto& s = config.scenario;
  ClassifyOptions options;
  const auto report = Classify(s.regime, s.market, s.tech, options);
  Json doc = ToJson(report);
  doc["exclusion"] =
      ToJson(MutuallyExclusiveCheck(s.market, s.tech, s.regime));
  int code = kExitOk;
  if (config.verify_grid > 0) {
    const auto grid =
        BruteForceNe(s.regime, s.market, s.tech, config.verify_grid);
    const auto cmp = CompareWithGrid(report, grid);
    doc["verification"] = {{"grid_size", config.verify_grid},
                           {"grid", ToJson(grid)},
                           {"agrees", cmp.agrees},
                           {"issues", cmp.issues}};
    if (!cmp.agrees) code = kExitMismatch;
  } else {
    doc["verification"] = nullptr;
  }
  EnsureDir(out_dir);
  WriteJson(out_dir / "equilibrium.json", doc);
  CategorySet set(report.effective_categories());
  log << "equilibrium (" << RegimeName(s.regime) << "): " << set.ToString()
      << (report.in_gap() ? " [numeric, gap]" : "")
      << (config.verify_grid > 0
              ? (code == kExitOk ? " grid: agree" : " grid: MISMATCH")
              : "")
      << '\n';
  return code;
}

int RunRegions(const ScenarioConfig& config, const fs::path& out_dir,
               std::ostream& log) {
  const auto& s = config.scenario;
  RegionGrid grid;
  if (config.regions_regime == "both") {
    grid = RegimeComparison(config.regions, s.market, s.tech.efficacy);
  } else {
    grid = RegionMap(config.regions, ParseRegime(config.regions_regime),
                     s.market, s.tech.efficacy);
  }
  const auto summary = Summarize(grid);
  Json doc;
  doc["scenario"] = ScenarioJson(s);
  doc["regions"] = RegionConfigJson(config.regions);
  doc["regime"] = config.regions_regime;
  doc["summary"] = ToJson(summary);
  const std::string csv = RegionCsv(grid);
  EnsureDir(out_dir);
  WriteFile(out_dir / "regions.csv", csv);
  WriteJson(out_dir / "regions_summary.json", doc);
  log << "regions: " << summary.cells << " cells, A=" << summary.region_a
      << " B=" << summary.region_b << '\n';
  return kExitOk;
}

int RunSimulate(const ScenarioConfig& config, const fs::path& out_dir,
                std::ostream& log) {
  const auto& s = config.scenario;
  const auto& sc = config.simulate;
  const double m0 = s.tech.base_noise;
  const StrategyProfile profile{sc.m_i.value_or(m0), sc.m_j.value_or(m0),
                                s.regime};
  const auto sim = SimulateStage2(profile, s.market, s.tech, sc.n, sc.seed);
  const PayoffSurface surface(s.regime, s.market, s.tech);
  Json doc;
  doc["scenario"] = ScenarioJson(s);
  doc["simulation"] = ToJson(sim);
  const double closed = surface.Value(profile.m_i, profile.m_j);
  doc["closed_form_payoff"] = closed;
  doc["z_score"] = sim.profit_std_error > 0.0
                       ? (sim.mean_profit - closed) / sim.profit_std_error
                       : 0.0;
  if (sc.tail) {
    const auto mix = MakeMixture(*sc.tail, s.tech.cost_variance);
    const auto bounds =
        TailPayoffBounds(profile, s.market, s.tech, mix, sc.tail->n, sc.seed,
                         sc.tail->deviation_points);
    const auto check = EpsilonNeCheck(profile, s.market, s.tech,
                                      bounds.phi_lower, bounds.phi_upper);
    doc["tail"] = {{"mixture", ToJson(mix)},
                   {"bounds", ToJson(bounds)},
                   {"epsilon_ne", ToJson(check)}};
  } else {
    doc["tail"] = nullptr;
  }
  if (sim.negative_quantity_fraction > 0.0 || sim.negative_price_fraction > 0.0) {
    doc["diagnostics"] = {"negative quantities or prices occurred"};
  } else {
    doc["diagnostics"] = Json::array();
  }
  EnsureDir(out_dir);
  WriteJson(out_dir / "simulation.json", doc);
  log << "simulate: mean_profit=" << Num(sim.mean_profit)
      << " se=" << Num(sim.profit_std_error) << " closed_form=" << Num(closed)
      << '\n';
  return kExitOk;
}

int RunReproduceFigures(const ScenarioConfig& config, const fs::path& out_dir,
                        std::ostream& log) {
  const MarketParams params = config.scenario.market;
  const double alpha = config.scenario.tech.efficacy;
  const double log_alpha = std::log(alpha);
  const double m0 = 1.5 * 36.0 * params.b / log_alpha;
  const InfoTech base{1.0, m0, alpha};
  const auto sharing_th = SharingThresholds::Compute(params, base);
  if (!sharing_th.sigma_tilde || !sharing_th.sigma_hat_thr) {
    throw ScenarioError("alpha", "example thresholds undefined");
  }
  const double sigma_low = 0.9 * *sharing_th.sigma_tilde;
  const double sigma_high = 1.2 * *sharing_th.sigma_hat_thr;

  EnsureDir(out_dir);
  Json files = Json::array();
  auto emit = [&](const std::string& name, const std::string& content) {
    WriteFile(out_dir / name, content);
    files.push_back(name);
  };

  // Joint density of two signals with sigma = 4, m_i = m_j = 2.
  const double sig = 4.0;
  const double noise = 2.0;
  {
    std::ostringstream csv;
    csv << "z_i,z_j,density\n";
    const double var = sig + noise;
    const double det = var * var - sig * sig;
    const double half = 4.0 * std::sqrt(var);
    std::vector<std::vector<double>> rows;
    for (int r = 0; r <= 60; ++r) {
      for (int c = 0; c <= 60; ++c) {
        const double zi = -half + 2.0 * half * r / 60.0;
        const double zj = -half + 2.0 * half * c / 60.0;
        const double q = (var * zi * zi - 2.0 * sig * zi * zj + var * zj * zj) / det;
        rows.push_back({zi, zj,
                        std::exp(-0.5 * q) /
                            (2.0 * std::numbers::pi * std::sqrt(det))});
      }
    }
    WriteCsvRows(csv, rows);
    emit("bivariate_signals.csv", csv.str());
  }

  // Cost densities: prior, after one signal, after two.
  const double z_i = 2.0;
  const double z_j = 1.0;
  {
    const double one_mean = SingleSignalEstimate(z_i, sig, noise);
    const double one_var = PosteriorVariance(sig, noise);
    const double two_mean = PooledEstimate(z_i, z_j, sig, noise, noise);
    const double two_var = PosteriorVariance(sig, noise, noise);
    std::ostringstream csv;
    csv << "cost,prior_density,one_signal_density,two_signal_density,"
           "one_signal_variance,two_signal_variance\n";
    std::vector<std::vector<double>> rows;
    for (int k = 0; k <= 160; ++k) {
      const double x = -8.0 + 0.1 * k;
      rows.push_back({x, NormalPdf(x, 0.0, sig), NormalPdf(x, one_mean, one_var),
                      NormalPdf(x, two_mean, two_var), one_var, two_var});
    }
    WriteCsvRows(csv, rows);
    emit("conditional_cost.csv", csv.str());
  }
  {
    std::ostringstream csv;
    csv << "noise_variance,one_signal_variance,two_signal_variance,"
           "pooled_estimate_variance\n";
    std::vector<std::vector<double>> rows;
    for (double m : LogSpace(0.01, 100.0, 101)) {
      rows.push_back({m, PosteriorVariance(sig, m), PosteriorVariance(sig, m, m),
                      PooledVariance(sig, m, m)});
    }
    WriteCsvRows(csv, rows);
    emit("conditional_variance.csv", csv.str());
  }

  // Best-response curves at the example m0.
  Json examples = Json::array();
  for (Regime regime : {Regime::kSharing, Regime::kNonSharing}) {
    for (const auto& [label, sigma] :
         {std::pair{"low", sigma_low}, std::pair{"high", sigma_high}}) {
      const InfoTech tech{sigma, m0, alpha};
      const PayoffSurface surface(regime, params, tech);
      const auto grid = LogSpace(1e-3 * m0, m0, 200);
      std::vector<double> responses(grid.size());
      ParallelFor(grid.size(), [&](std::size_t k) {
        responses[k] = BestResponse(grid[k], regime, params, tech);
      });
      std::ostringstream csv;
      csv << "m_j,best_response,payoff\n";
      std::vector<std::vector<double>> rows;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        rows.push_back(
            {grid[k], responses[k], surface.Value(responses[k], grid[k])});
      }
      WriteCsvRows(csv, rows);
      const std::string name = "best_response_" +
                               std::string(RegimeName(regime)) + "_" + label +
                               ".csv";
      emit(name, csv.str());
      const auto report = Classify(regime, params, tech);
      Json eq = Json::array();
      for (const auto& c : NumericEquilibria(regime, params, tech)) {
        eq.push_back({{"m_i", c.profile.m_i},
                      {"m_j", c.profile.m_j},
                      {"category", std::string(CategoryName(c.category))}});
      }
      examples.push_back(
          {{"file", name},
           {"regime", std::string(RegimeName(regime))},
           {"sigma", sigma},
           {"classification", CategorySet(report.effective_categories())
                                  .ToString()},
           {"certified_candidates", [&] {
              Json arr = Json::array();
              for (const auto& c : report.candidates) {
                if (c.certified) arr.push_back(ToJson(c.profile));
              }
              return arr;
            }()},
           {"nash_equilibria", eq}});
    }
  }

  // Region maps.
  RegionConfig rc = config.regions;
  const auto sharing = RegionMap(rc, Regime::kSharing, params, alpha);
  const auto nonsharing = RegionMap(rc, Regime::kNonSharing, params, alpha);
  const auto comparison = RegimeComparison(rc, params, alpha);
  emit("sharing_regions.csv", RegionCsv(sharing));
  emit("nonsharing_regions.csv", RegionCsv(nonsharing));
  emit("regime_comparison.csv", RegionCsv(comparison));

  Json manifest;
  manifest["market"] = ToJson(params);
  manifest["alpha"] = alpha;
  manifest["m0"] = m0;
  manifest["m0_rule"] = "1.5 * 36 b / ln(alpha)";
  manifest["sigma_low"] = sigma_low;
  manifest["sigma_high"] = sigma_high;
  manifest["sigma_rule"] =
      "low = 0.9 sigma_tilde, high = 1.2 sigma_hat_thr (sharing thresholds, "
      "used for both regimes)";
  manifest["thresholds"] = ThresholdsJson(params, InfoTech{sigma_low, m0, alpha});
  manifest["signal_example"] = {{"sigma", sig},
                                {"m_i", noise},
                                {"m_j", noise},
                                {"observed_z_i", z_i},
                                {"observed_z_j", z_j}};
  manifest["regions"] = RegionConfigJson(rc);
  manifest["region_summary"] = ToJson(Summarize(comparison));
  manifest["best_response_examples"] = examples;
  manifest["files"] = files;
  WriteJson(out_dir / "manifest.json", manifest);
  log << "reproduce-figures: " << files.size() << " files -> "
      << out_dir.string() << '\n';
  return kExitOk;
}

int RunCli(int argc, char** argv) {
  CLI::App app{"Cournot duopoly of cyber insurers: payoffs, equilibria, "
               "regions and simulation"};
  app.require_subcommand(1);
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir = "out";
  int verify_grid = -1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON scenario file");
    cmd->add_option("--set", overrides,
                    "Override key=value (dotted keys); repeatable")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    cmd->add_option("--out", out_dir, "Output directory");
  };
  auto* payoff = app.add_subcommand("payoff", "Payoffs and derivatives");
  auto* equilibrium =
      app.add_subcommand("equilibrium", "Classify equilibria of one scenario");
  auto* regions = app.add_subcommand("regions", "Equilibrium region map");
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo payoff check");
  auto* figures =
      app.add_subcommand("reproduce-figures", "Write all figure data");
  for (auto* cmd : {payoff, equilibrium, regions, simulate, figures}) {
    add_common(cmd);
  }
  equilibrium->add_option("--verify-grid", verify_grid,
                          "Cross-check with an N-point grid oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    ScenarioConfig config;
    if (figures->parsed()) {
      nlohmann::json base = {{"a", 10.0}, {"b", 1.0}, {"d", 1.0},
                             {"alpha", 3.0}};
      config = ParseConfig(LoadDocument(config_path, overrides, base), false);
    } else {
      const bool sweep = regions->parsed();
      config = ParseConfig(LoadDocument(config_path, overrides), !sweep);
    }
    if (verify_grid >= 0) {
      if (verify_grid != 0 && (verify_grid < 50 || verify_grid > 5000)) {
        throw ScenarioError("--verify-grid", "must be 0 or lie in [50, 5000]");
      }
      config.verify_grid = verify_grid;
    }
    const fs::path out(out_dir);
    if (payoff->parsed()) return RunPayoff(config, out, std::cout);
    if (equilibrium->parsed()) return RunEquilibrium(config, out, std::cout);
    if (regions->parsed()) return RunRegions(config, out, std::cout);
    if (simulate->parsed()) return RunSimulate(config, out, std::cout);
    return RunReproduceFigures(config, out, std::cout);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace cyberins::cli
