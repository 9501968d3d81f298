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

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli_config.h"
#include "gtest/gtest.h"

namespace cyberins {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const double kM0 = 54.0 / std::log(3.0);

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           ("cyberins_cli_" + std::string(info->name()) + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the binary through the shell and returns its exit status.
  int Run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + CYBERINS_BINARY + " " + args + " >" +
                            (dir_ / "stdout.txt").string() + " 2>" +
                            (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string Config(const json& doc, const std::string& name = "config.json") {
    const auto path = dir_ / name;
    std::ofstream(path) << doc.dump(2);
    return path.string();
  }

  std::string Read(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  json ReadJson(const fs::path& path) { return json::parse(Read(path)); }

  std::vector<std::vector<std::string>> ReadCsv(const fs::path& path) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(Read(path));
    for (std::string line; std::getline(in, line);) {
      std::vector<std::string> cells;
      std::istringstream ls(line);
      for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
      rows.push_back(cells);
    }
    return rows;
  }

  std::string Out(const std::string& sub) { return (dir_ / sub).string(); }

  fs::path dir_;
};

json Base(double sigma, double m0, const std::string& regime = "sharing") {
  return {{"a", 10}, {"b", 1}, {"d", 1}, {"sigma", sigma},
          {"m0", m0}, {"alpha", 3}, {"regime", regime}};
}

TEST(ConfigTest, OverridesUseDottedKeys) {
  json doc = Base(4, 2);
  cli::ApplyOverride(doc, "sigma=5");
  cli::ApplyOverride(doc, "simulate.tail.w2=0");
  cli::ApplyOverride(doc, "regime=nonsharing");
  EXPECT_EQ(doc["sigma"], 5);
  EXPECT_EQ(doc["simulate"]["tail"]["w2"], 0);
  EXPECT_EQ(doc["regime"], "nonsharing");
  EXPECT_THROW(cli::ApplyOverride(doc, "novalue"), DomainError);
}

TEST(ConfigTest, SectionsAreStrict) {
  json doc = Base(4, 2);
  doc["simulate"] = {{"n", 20000}, {"seed", 3}, {"tail", {{"w2", 0.0}}}};
  const auto config = cli::ParseConfig(doc, true);
  EXPECT_EQ(config.simulate.n, 20000u);
  EXPECT_EQ(config.simulate.seed, 3u);
  ASSERT_TRUE(config.simulate.tail.has_value());
  EXPECT_EQ(config.simulate.tail->tail_weight, 0.0);
  doc["simulate"]["tail"]["wobble"] = 1;
  EXPECT_THROW(cli::ParseConfig(doc, true), DomainError);
}

TEST_F(CliTest, PayoffReportsPooledVariance) {
  json doc = Base(4, 2);
  doc["payoff"] = {{"points", {{{"m_i", 2}, {"m_j", 2}}}}};
  ASSERT_EQ(Run("payoff --config " + Config(doc) + " --out " + Out("p")), 0);
  const auto out = ReadJson(dir_ / "p" / "payoff.json");
  const auto& point = out["points"][0];
  EXPECT_NEAR(point["estimation"]["pooled_variance"].get<double>(), 3.2, 1e-12);
  EXPECT_EQ(point["nonsharing_rule"]["alpha1"].get<double>(), -0.25);
  EXPECT_NEAR(point["sharing"]["payoff"].get<double>(), 11.4667, 5e-5);
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  json doc = Base(4, 2);
  doc.erase("alpha");
  EXPECT_EQ(Run("payoff --config " + Config(doc) + " --out " + Out("p")), 2);
  EXPECT_NE(Read(dir_ / "stderr.txt").find("alpha"), std::string::npos);
  doc = Base(4, 2);
  doc["payoff"] = {{"points", {{{"m_i", 3}, {"m_j", 2}}}}};
  EXPECT_EQ(Run("payoff --config " + Config(doc) + " --out " + Out("p")), 2);
  EXPECT_EQ(Run("payoff --config " + Out("missing.json") + " --out " + Out("p")), 2);
  EXPECT_EQ(Run("nonsense"), 2);
  EXPECT_EQ(Run("payoff --config " + Config(Base(4, 2)) + " --set bogus=1"), 2);
}

TEST_F(CliTest, UnwritableOutputExitsFour) {
  const std::string blocker = Out("file");
  std::ofstream(blocker) << "x";
  EXPECT_EQ(Run("payoff --config " + Config(Base(4, 2)) + " --out " + blocker +
                "/sub"),
            4);
  EXPECT_EQ(Run("reproduce-figures --out " + blocker + "/sub"), 4);
}

TEST_F(CliTest, EquilibriumFigureCaptions) {
  const double hat = kM0 / (std::sqrt(6.0) - 2.0);
  const auto cfg = Config(Base(1.2 * hat, kM0));
  ASSERT_EQ(Run("equilibrium --config " + cfg + " --out " + Out("one")), 0);
  EXPECT_EQ(ReadJson(dir_ / "one" / "equilibrium.json")["categories"],
            json::array({"OneInvests"}));
  const auto none = Config(Base(0.9 * 2 * kM0, kM0), "none.json");
  ASSERT_EQ(Run("equilibrium --config " + none + " --out " + Out("none")), 0);
  EXPECT_EQ(ReadJson(dir_ / "none" / "equilibrium.json")["categories"],
            json::array({"NeitherInvests"}));
}

TEST_F(CliTest, VerifyGridAgreesInBothRegimes) {
  const double hat = kM0 / (std::sqrt(6.0) - 2.0);
  for (const char* regime : {"sharing", "nonsharing"}) {
    const auto cfg = Config(Base(1.2 * hat, kM0, regime));
    EXPECT_EQ(Run("equilibrium --config " + cfg + " --verify-grid 200 --out " +
                  Out(regime)),
              0)
        << regime;
    const auto out = ReadJson(dir_ / regime / "equilibrium.json");
    EXPECT_TRUE(out["verification"]["agrees"].get<bool>());
  }
}

// A 50-point grid is too coarse to hold the symmetric equilibrium here.
TEST_F(CliTest, CoarseGridMismatchExitsThree) {
  const auto cfg = Config(Base(25.2, kM0, "nonsharing"));
  EXPECT_EQ(Run("equilibrium --config " + cfg + " --verify-grid 50 --out " +
                Out("coarse")),
            3);
  const auto out = ReadJson(dir_ / "coarse" / "equilibrium.json");
  EXPECT_FALSE(out["verification"]["agrees"].get<bool>());
  EXPECT_FALSE(out["verification"]["issues"].empty());
}

TEST_F(CliTest, RegionsAreByteIdentical) {
  json doc = Base(4, 2);
  doc.erase("sigma");
  doc.erase("m0");
  doc["regions"] = {{"sigma_points", 40}, {"m0_points", 40}};
  const auto cfg = Config(doc);
  ASSERT_EQ(Run("regions --config " + cfg + " --out " + Out("r1")), 0);
  ASSERT_EQ(Run("regions --config " + cfg + " --out " + Out("r2"),
                "CYBERINS_THREADS=1"),
            0);
  EXPECT_EQ(Read(dir_ / "r1" / "regions.csv"), Read(dir_ / "r2" / "regions.csv"));
  EXPECT_EQ(Read(dir_ / "r1" / "regions_summary.json"),
            Read(dir_ / "r2" / "regions_summary.json"));
  const auto summary = ReadJson(dir_ / "r1" / "regions_summary.json");
  EXPECT_GT(summary["summary"]["region_a"].get<int>(), 0);
}

TEST_F(CliTest, RegionsMinimalGrid) {
  json doc = Base(4, 2);
  doc["regions"] = {{"sigma_points", 2}, {"m0_points", 2}};
  ASSERT_EQ(Run("regions --config " + Config(doc) + " --out " + Out("r")), 0);
  EXPECT_EQ(ReadCsv(dir_ / "r" / "regions.csv").size(), 5u);
}

TEST_F(CliTest, SimulateIsReproducibleAcrossThreadCounts) {
  json doc = Base(4, 2);
  doc["simulate"] = {{"n", 200000}, {"seed", 5}};
  const auto cfg = Config(doc);
  ASSERT_EQ(Run("simulate --config " + cfg + " --out " + Out("s1"),
                "CYBERINS_THREADS=1"),
            0);
  ASSERT_EQ(Run("simulate --config " + cfg + " --out " + Out("s2"),
                "CYBERINS_THREADS=3"),
            0);
  EXPECT_EQ(Read(dir_ / "s1" / "simulation.json"),
            Read(dir_ / "s2" / "simulation.json"));
  const auto out = ReadJson(dir_ / "s1" / "simulation.json");
  EXPECT_EQ(out["simulation"]["seed"], 5);
  EXPECT_LE(std::abs(out["z_score"].get<double>()), 3.0);
}

TEST_F(CliTest, SimulateWithoutTailWeightHasSmallEpsilon) {
  json doc = Base(4, 2);
  doc["simulate"] = {{"n", 20000},
                     {"tail", {{"w2", 0.0}, {"n", 100000}, {"deviation_points", 2}}}};
  ASSERT_EQ(Run("simulate --config " + Config(doc) + " --out " + Out("s")), 0);
  const auto tail = ReadJson(dir_ / "s" / "simulation.json")["tail"];
  double se = 0.0;
  for (const auto& p : tail["bounds"]["points"]) {
    se = std::max(se, p["std_error"].get<double>());
  }
  EXPECT_LE(tail["bounds"]["epsilon"].get<double>(), 12 * se);
}

TEST_F(CliTest, ReproduceFigures) {
  ASSERT_EQ(Run("reproduce-figures --out " + Out("fig")), 0);
  const fs::path fig = dir_ / "fig";
  const auto manifest = ReadJson(fig / "manifest.json");
  for (const auto& f : manifest["files"]) {
    EXPECT_TRUE(fs::exists(fig / f.get<std::string>())) << f;
  }
  EXPECT_NEAR(manifest["thresholds"]["sharing"]["sigma_tilde"].get<double>(),
              2 * kM0, 1e-9 * kM0);

  // Only-one-invests curves: the response to m0 is interior and the response
  // to that interior level is m0.
  const auto br = ReadCsv(fig / "best_response_sharing_high.csv");
  ASSERT_EQ(br[0], (std::vector<std::string>{"m_j", "best_response", "payoff"}));
  const double m_hat = std::stod(br.back()[1]);
  EXPECT_LT(m_hat, kM0 * 0.99);
  double nearest = 0.0, dist = 1e300;
  for (std::size_t k = 1; k < br.size(); ++k) {
    const double mj = std::stod(br[k][0]);
    if (std::abs(std::log(mj / m_hat)) < dist) {
      dist = std::abs(std::log(mj / m_hat));
      nearest = std::stod(br[k][1]);
    }
  }
  EXPECT_NEAR(nearest, kM0, 1e-9 * kM0);

  bool has_a = false, has_b = false;
  for (const auto& row : ReadCsv(fig / "regime_comparison.csv")) {
    has_a |= row.size() > 4 && row[4] == "A";
    has_b |= row.size() > 4 && row[4] == "B";
  }
  EXPECT_TRUE(has_a && has_b);

  const auto var = ReadCsv(fig / "conditional_variance.csv");
  ASSERT_GT(var.size(), 10u);
  for (std::size_t k = 1; k < var.size(); ++k) {
    EXPECT_LT(std::stod(var[k][2]), std::stod(var[k][1])) << "row " << k;
  }

  // Byte-identical on a second run.
  ASSERT_EQ(Run("reproduce-figures --out " + Out("fig2")), 0);
  for (const auto& f : manifest["files"]) {
    const auto name = f.get<std::string>();
    EXPECT_EQ(Read(fig / name), Read(dir_ / "fig2" / name)) << name;
  }
}

}  // namespace
}  // namespace cyberins
