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

#include "cyberins/json_io.h"

#include <string>

namespace cyberins {

namespace {

Json Optional(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json Categories(const std::vector<NECategory>& categories) {
  Json out = Json::array();
  for (NECategory c : categories) out.push_back(std::string(CategoryName(c)));
  return out;
}

}  // namespace

Json ToJson(const MarketParams& params) {
  return {{"a", params.a}, {"b", params.b}, {"d", params.d}};
}

Json ToJson(const InfoTech& tech) {
  return {{"sigma", tech.cost_variance},
          {"m0", tech.base_noise},
          {"alpha", tech.efficacy}};
}

Json ToJson(const StrategyProfile& profile) {
  return {{"m_i", profile.m_i},
          {"m_j", profile.m_j},
          {"regime", std::string(RegimeName(profile.regime))}};
}

Json ToJson(const SharingThresholds& th) {
  return {{"m0_crit", th.m0_crit},
          {"sigma_tilde", Optional(th.sigma_tilde)},
          {"Gamma", th.gamma},
          {"sigma_hat_thr", Optional(th.sigma_hat_thr)}};
}

Json ToJson(const NonSharingThresholds& th) {
  return {{"m0_low", th.m0_low},
          {"m0_mid", th.m0_mid},
          {"gamma_tilde", th.gamma_tilde},
          {"gamma_hat", th.gamma_hat},
          {"sigma_acute", Optional(th.sigma_acute)},
          {"sigma_breve", Optional(th.sigma_breve)}};
}

Json ToJson(const FeasibilityCertificate& cert) {
  return {{"m_i", cert.point.m_i},
          {"m_j", cert.point.m_j},
          {"kkt_case", std::string(KktCaseName(cert.kkt_case))},
          {"foc_residual", cert.foc_residual},
          {"soc_value", cert.soc_value}};
}

Json ToJson(const NashCandidate& candidate) {
  return {{"profile", ToJson(candidate.profile)},
          {"category", std::string(CategoryName(candidate.category))},
          {"certified", candidate.certified},
          {"nash_verified", candidate.nash_verified},
          {"payoff_i", candidate.payoff_i},
          {"payoff_j", candidate.payoff_j},
          {"certificate_i", ToJson(candidate.certificate_i)},
          {"certificate_j", ToJson(candidate.certificate_j)}};
}

Json ToJson(const BruteForceResult& result) {
  Json profiles = Json::array();
  for (const auto& p : result.profiles) {
    profiles.push_back({{"m_i", p.m_i}, {"m_j", p.m_j}});
  }
  return {{"grid_points", result.grid.size()},
          {"grid_min", result.grid.empty() ? 0.0 : result.grid.front()},
          {"profiles", profiles},
          {"categories", Categories(result.categories)}};
}

Json ToJson(const EquilibriumReport& report) {
  Json out;
  out["regime"] = std::string(RegimeName(report.regime));
  out["market"] = ToJson(report.params);
  out["info"] = ToJson(report.tech);
  out["categories"] = Categories(report.categories);
  out["effective_categories"] = Categories(report.effective_categories());
  out["proposition_case"] = report.proposition_case;
  out["in_gap"] = report.in_gap();
  out["thresholds"] = {{"sharing", ToJson(report.sharing_thresholds)},
                       {"nonsharing", ToJson(report.nonsharing_thresholds)}};
  Json candidates = Json::array();
  for (const auto& c : report.candidates) candidates.push_back(ToJson(c));
  out["candidates"] = candidates;
  if (report.numeric) {
    Json numeric;
    numeric["label"] = "numeric";
    numeric["categories"] = Categories(report.numeric->categories);
    Json eq = Json::array();
    for (const auto& c : report.numeric->equilibria) eq.push_back(ToJson(c));
    numeric["equilibria"] = eq;
    numeric["grid"] =
        report.numeric->grid ? ToJson(*report.numeric->grid) : Json(nullptr);
    out["numeric"] = numeric;
  } else {
    out["numeric"] = nullptr;
  }
  out["diagnostics"] = report.diagnostics;
  return out;
}

Json ToJson(const EpsilonNeResult& result) {
  Json out = {{"epsilon", result.epsilon},
              {"max_gain", result.max_gain},
              {"holds", result.holds}};
  if (result.witness) {
    out["witness"] = {{"player", result.witness->player},
                      {"deviation", result.witness->deviation},
                      {"gain", result.witness->gain}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json ToJson(const ExclusionResult& result) {
  return {{"holds", result.holds},
          {"knife_edge", result.knife_edge},
          {"boundary_is_ne", result.boundary_is_ne},
          {"one_sided_is_ne", result.one_sided_is_ne},
          {"m_hat", Optional(result.m_hat)},
          {"payoff_gap", result.payoff_gap}};
}

Json ToJson(const TailMixture& mix) {
  return {{"w1", mix.body_weight},      {"w2", mix.tail_weight},
          {"x0", mix.threshold},        {"body_variance", mix.body_variance},
          {"xi", mix.shape},            {"beta", mix.scale},
          {"mean", mix.Mean()},         {"variance", mix.Variance()}};
}

Json ToJson(const SimulationResult& result) {
  return {{"profile", ToJson(result.profile)},
          {"n", result.n},
          {"seed", result.seed},
          {"mean_profit", result.mean_profit},
          {"profit_std_error", result.profit_std_error},
          {"mean_quantity", result.mean_quantity},
          {"quantity_variance", result.quantity_variance},
          {"negative_quantity_fraction", result.negative_quantity_fraction},
          {"negative_price_fraction", result.negative_price_fraction}};
}

Json ToJson(const EpsilonBounds& bounds) {
  Json points = Json::array();
  for (const auto& p : bounds.points) {
    points.push_back({{"m_i", p.profile.m_i},
                      {"m_j", p.profile.m_j},
                      {"normal_payoff", p.normal_payoff},
                      {"mixture_payoff", p.mixture_payoff},
                      {"std_error", p.std_error}});
  }
  return {{"phi_lower", bounds.phi_lower},
          {"phi_upper", bounds.phi_upper},
          {"epsilon", bounds.epsilon},
          {"tail_adjustment", bounds.tail_adjustment},
          {"mixture_max_gain", bounds.mixture_max_gain},
          {"n", bounds.n},
          {"seed", bounds.seed},
          {"points", points}};
}

Json ToJson(const RegionSummary& s) {
  return {{"cells", s.cells},
          {"same", s.same},
          {"region_a", s.region_a},
          {"region_b", s.region_b},
          {"other", s.other},
          {"region_a_fraction", s.Fraction(s.region_a)},
          {"region_b_fraction", s.Fraction(s.region_b)},
          {"gap_cells_sharing", s.gap_sharing},
          {"gap_cells_nonsharing", s.gap_nonsharing}};
}

Json ThresholdsJson(const MarketParams& params, const InfoTech& tech) {
  return {{"sharing", ToJson(SharingThresholds::Compute(params, tech))},
          {"nonsharing", ToJson(NonSharingThresholds::Compute(params, tech))}};
}

}  // namespace cyberins
