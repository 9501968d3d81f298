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

#include "cyberins/equilibrium.h"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

namespace cyberins {

namespace {

constexpr int kScanPoints = 256;
// 2^-41 is about 4.5e-13 relative on m.
constexpr int kBisectionBits = 41;

double LogEfficacy(const InfoTech& tech) { return tech.LogEfficacy(); }

// Every interior stationary point of J_i satisfies 1/(m ln(alpha)) = benefit
// term, and the benefit term is bounded by 1/(9b) with sharing and 5/(12b)
// without. Below half of the implied lower bound the marginal is strictly
// positive, so root scans can start there.
double ScanLower(Regime regime, const MarketParams& params,
                 const InfoTech& tech) {
  const double factor = regime == Regime::kSharing ? 9.0 : 12.0 / 5.0;
  const double bound = 0.5 * factor * params.b / LogEfficacy(tech);
  return std::clamp(bound, tech.MinNoise(), tech.base_noise);
}

std::vector<double> LogGrid(double lo, double hi, int points) {
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / (points - 1);
  for (int k = 0; k < points; ++k) {
    grid[static_cast<std::size_t>(k)] = std::exp(log_lo + step * k);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

double Bisect(const std::function<double(double)>& f, double lo, double hi) {
  if (f(lo) == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  boost::uintmax_t max_iter = 200;
  const auto bracket = boost::math::tools::bisect(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(kBisectionBits),
      max_iter);
  return 0.5 * (bracket.first + bracket.second);
}

struct Root {
  double value = 0.0;
  bool descending = false;  // f goes from positive to negative
};

// Sign changes of f on a log-spaced scan of [lo, hi], refined by bisection.
std::vector<Root> FindRoots(const std::function<double(double)>& f, double lo,
                            double hi, int points = kScanPoints) {
  std::vector<Root> roots;
  if (!(hi > lo)) return roots;
  const auto grid = LogGrid(lo, hi, points);
  double prev_x = grid.front();
  double prev_f = f(prev_x);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double x = grid[k];
    const double fx = f(x);
    if ((prev_f > 0.0 && fx <= 0.0) || (prev_f < 0.0 && fx >= 0.0)) {
      // A zero landing exactly on a scan point is attributed to the bracket
      // that ends there.
      roots.push_back({Bisect(f, prev_x, x), prev_f > 0.0});
    }
    prev_x = x;
    prev_f = fx;
  }
  return roots;
}

double PayoffScale(double value) { return std::max(1.0, std::abs(value)); }

bool AtBoundary(double m, double m0) { return NearlyEqual(m, m0); }

void AddUnique(std::vector<NECategory>& categories, NECategory category) {
  if (std::find(categories.begin(), categories.end(), category) ==
      categories.end()) {
    categories.push_back(category);
  }
  std::sort(categories.begin(), categories.end());
}

// Interior local maximum of J_i(., m0) with the highest payoff.
std::optional<double> InteriorResponseToM0(Regime regime,
                                           const MarketParams& params,
                                           const InfoTech& tech) {
  const PayoffSurface surface(regime, params, tech);
  const double m0 = tech.base_noise;
  std::optional<double> best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (double m : ResponseCandidates(m0, regime, params, tech)) {
    if (AtBoundary(m, m0)) continue;
    const double value = surface.Value(m, m0);
    if (value > best_value) {
      best = m;
      best_value = value;
    }
  }
  return best;
}

}  // namespace

std::string_view CategoryName(NECategory category) {
  switch (category) {
    case NECategory::kNeitherInvests:
      return "NeitherInvests";
    case NECategory::kOneInvests:
      return "OneInvests";
    case NECategory::kBothInvestSymmetric:
      return "BothInvestSymmetric";
    case NECategory::kBothInvestAsymmetric:
      return "BothInvestAsymmetric";
    case NECategory::kIndeterminateByProposition:
      return "IndeterminateByProposition";
  }
  return "Unknown";
}

std::string_view KktCaseName(KktCase kkt_case) {
  switch (kkt_case) {
    case KktCase::kInteriorFoc:
      return "InteriorFOC";
    case KktCase::kBoundaryM0:
      return "BoundaryM0";
    case KktCase::kInfeasible:
      return "Infeasible";
  }
  return "Unknown";
}

SharingThresholds SharingThresholds::Compute(const MarketParams& params,
                                             const InfoTech& tech) {
  const double b = params.b;
  const double m0 = tech.base_noise;
  const double log_alpha = LogEfficacy(tech);
  SharingThresholds t;
  t.m0_crit = 36.0 * b / log_alpha;
  t.gamma = std::sqrt(m0 * log_alpha / (9.0 * b));
  if (m0 * log_alpha > 36.0 * b) {
    t.sigma_tilde = 36.0 * b * m0 / (m0 * log_alpha - 36.0 * b);
    t.sigma_hat_thr = m0 / (t.gamma - 2.0);
  }
  return t;
}

NonSharingThresholds NonSharingThresholds::Compute(const MarketParams& params,
                                                   const InfoTech& tech) {
  const double b = params.b;
  const double m0 = tech.base_noise;
  const double log_alpha = LogEfficacy(tech);
  NonSharingThresholds t;
  t.m0_low = 27.0 * b / (5.0 * log_alpha);
  t.m0_mid = 9.0 * b / log_alpha;
  t.gamma_tilde = 5.0 * m0 * log_alpha / (3.0 * b);
  t.gamma_hat = m0 * log_alpha / b;
  if (t.gamma_tilde > 9.0) {
    t.sigma_acute = 2.0 * m0 / (std::sqrt(t.gamma_tilde) - 3.0);
  }
  if (t.gamma_hat > 9.0) {
    t.sigma_breve = 2.0 * m0 / (std::sqrt(t.gamma_hat) - 3.0);
  }
  return t;
}

FeasibilityCertificate KktFeasible(double m_i, double m_j, Regime regime,
                                   const MarketParams& params,
                                   const InfoTech& tech) {
  const PayoffSurface surface(regime, params, tech);
  const double m0 = tech.base_noise;
  FeasibilityCertificate cert;
  cert.point = {m_i, m_j, regime};
  if (m_i < tech.MinNoise()) {
    // The marginal diverges to +infinity at zero noise.
    cert.kkt_case = KktCase::kInfeasible;
    cert.foc_residual = std::numeric_limits<double>::infinity();
    cert.soc_value = -std::numeric_limits<double>::infinity();
    return cert;
  }
  if (AtBoundary(m_i, m0)) {
    cert.point.m_i = m0;
    cert.foc_residual = surface.Marginal(m0, m_j);
    cert.soc_value = surface.SecondDerivative(m0, m_j);
    cert.kkt_case =
        cert.foc_residual >= 0.0 ? KktCase::kBoundaryM0 : KktCase::kInfeasible;
    return cert;
  }
  cert.foc_residual = surface.Marginal(m_i, m_j);
  cert.soc_value = surface.SecondDerivative(m_i, m_j);
  const double scale = 1.0 / (m_i * LogEfficacy(tech));
  const bool stationary = std::abs(cert.foc_residual) <= kRelTol * scale;
  cert.kkt_case = stationary && cert.soc_value <= 0.0 ? KktCase::kInteriorFoc
                                                      : KktCase::kInfeasible;
  return cert;
}

std::vector<double> SharingInteriorCandidates(const MarketParams& params,
                                              const InfoTech& tech) {
  params.RequireIdenticalProducts();
  tech.Validate();
  const double b = params.b;
  const double s = tech.cost_variance;
  const double m0 = tech.base_noise;
  const double log_alpha = LogEfficacy(tech);
  // Factored discriminant: s^3 m0^3 ln(a) (s m0 ln(a) - 36 b (s + m0)).
  const double sign_factor = s * m0 * log_alpha - 36.0 * b * (s + m0);
  if (sign_factor < 0.0) return {};
  const double quad = 9.0 * b * (s + m0) * (s + m0);
  const double lin = 18.0 * b * s * m0 * (s + m0) - s * s * m0 * m0 * log_alpha;
  const double cst = 9.0 * b * s * s * m0 * m0;
  const double disc =
      std::pow(s * m0, 3) * log_alpha * std::max(sign_factor, 0.0);
  // Stable quadratic formula.
  const double q = -0.5 * (lin + std::copysign(std::sqrt(disc), lin));
  std::vector<double> roots = {q / quad, cst / q};
  std::sort(roots.begin(), roots.end());
  std::vector<double> inside;
  for (double r : roots) {
    if (r > 0.0 && r <= m0) inside.push_back(r);
  }
  if (inside.size() == 2 && inside[0] == inside[1]) inside.pop_back();
  return inside;
}

bool FreeRiderLocusFeasible(double m, double sigma, double m0) {
  if (!(m > 0.0) || !(sigma > 0.0)) {
    throw DomainError("locus check needs positive m and sigma");
  }
  const double lower = (std::sqrt(3.0) - 1.0) / 2.0 * sigma;
  const double upper = (1.0 + std::sqrt(3.0)) / 4.0 * sigma;
  return m >= lower && m <= upper && 2.0 * m0 > sigma &&
         sigma * sigma / (4.0 * m) <= m0;
}

bool SymmetricLocusFeasible(double m, double sigma) {
  if (!(m > 0.0) || !(sigma > 0.0)) {
    throw DomainError("locus check needs positive m and sigma");
  }
  return sigma > 2.0 * m;
}

std::vector<double> ResponseCandidates(double m_j, Regime regime,
                                       const MarketParams& params,
                                       const InfoTech& tech) {
  const PayoffSurface surface(regime, params, tech);
  const double m0 = tech.base_noise;
  std::vector<double> candidates;
  const double lo = ScanLower(regime, params, tech);
  const auto marginal = [&](double m) { return surface.Marginal(m, m_j); };
  for (const Root& root : FindRoots(marginal, lo, m0)) {
    if (root.descending && !AtBoundary(root.value, m0)) {
      candidates.push_back(root.value);
    }
  }
  if (surface.Marginal(m0, m_j) >= 0.0) candidates.push_back(m0);
  return candidates;
}

double BestResponse(double m_j, Regime regime, const MarketParams& params,
                    const InfoTech& tech) {
  const PayoffSurface surface(regime, params, tech);
  const auto candidates = ResponseCandidates(m_j, regime, params, tech);
  if (candidates.empty()) {
    throw InternalError("best response has no KKT candidate");
  }
  // Candidates are increasing in m, so scanning from the top keeps m0 on ties.
  double best = candidates.back();
  double best_value = surface.Value(best, m_j);
  for (auto it = candidates.rbegin() + 1; it != candidates.rend(); ++it) {
    const double value = surface.Value(*it, m_j);
    if (value > best_value + 1e-12 * PayoffScale(best_value)) {
      best = *it;
      best_value = value;
    }
  }
  return best;
}

bool IsNashEquilibrium(const StrategyProfile& profile,
                       const MarketParams& params, const InfoTech& tech,
                       double tolerance) {
  const PayoffSurface surface(profile.regime, params, tech);
  const auto no_gain = [&](double own, double rival) {
    const double current = surface.Value(own, rival);
    const double response = BestResponse(rival, profile.regime, params, tech);
    const double gain = surface.Value(response, rival) - current;
    return gain <= tolerance * PayoffScale(current);
  };
  return no_gain(profile.m_i, profile.m_j) && no_gain(profile.m_j, profile.m_i);
}

NECategory CategorizeProfile(const StrategyProfile& profile, double m0,
                             double cell_ratio) {
  const auto at_m0 = [&](double m) { return m * cell_ratio >= m0; };
  const bool i_top = at_m0(profile.m_i);
  const bool j_top = at_m0(profile.m_j);
  if (i_top && j_top) return NECategory::kNeitherInvests;
  if (i_top || j_top) return NECategory::kOneInvests;
  const double hi = std::max(profile.m_i, profile.m_j);
  const double lo = std::min(profile.m_i, profile.m_j);
  return hi <= lo * cell_ratio ? NECategory::kBothInvestSymmetric
                               : NECategory::kBothInvestAsymmetric;
}

NashCandidate MakeCandidate(const StrategyProfile& profile,
                            const MarketParams& params, const InfoTech& tech,
                            bool verify_nash) {
  const PayoffSurface surface(profile.regime, params, tech);
  NashCandidate c;
  c.profile = profile;
  c.category = CategorizeProfile(profile, tech.base_noise);
  c.certificate_i =
      KktFeasible(profile.m_i, profile.m_j, profile.regime, params, tech);
  c.certificate_j =
      KktFeasible(profile.m_j, profile.m_i, profile.regime, params, tech);
  const auto passes = [](const FeasibilityCertificate& cert) {
    return cert.kkt_case != KktCase::kInfeasible;
  };
  const bool i_invests = !AtBoundary(profile.m_i, tech.base_noise);
  const bool j_invests = !AtBoundary(profile.m_j, tech.base_noise);
  if (i_invests || j_invests) {
    // The rival's boundary condition is left to the Nash check.
    c.certified = (!i_invests || passes(c.certificate_i)) &&
                  (!j_invests || passes(c.certificate_j));
  } else {
    c.certified = passes(c.certificate_i) && passes(c.certificate_j);
  }
  c.payoff_i = surface.Value(profile.m_i, profile.m_j);
  c.payoff_j = surface.Value(profile.m_j, profile.m_i);
  if (verify_nash) c.nash_verified = IsNashEquilibrium(profile, params, tech);
  return c;
}

std::optional<double> SymmetricInteriorPoint(Regime regime,
                                             const MarketParams& params,
                                             const InfoTech& tech) {
  const PayoffSurface surface(regime, params, tech);
  const double m0 = tech.base_noise;
  const double lo = ScanLower(regime, params, tech);
  const auto diagonal = [&](double m) { return surface.Marginal(m, m); };
  std::optional<double> best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (const Root& root : FindRoots(diagonal, lo, m0)) {
    if (AtBoundary(root.value, m0)) continue;
    const auto cert =
        KktFeasible(root.value, root.value, regime, params, tech);
    if (cert.kkt_case != KktCase::kInteriorFoc) continue;
    const double value = surface.Value(root.value, root.value);
    if (value > best_value) {
      best = root.value;
      best_value = value;
    }
  }
  return best;
}

std::vector<NashCandidate> NumericEquilibria(Regime regime,
                                             const MarketParams& params,
                                             const InfoTech& tech) {
  const PayoffSurface surface(regime, params, tech);
  const double m0 = tech.base_noise;
  const double sigma = tech.cost_variance;
  const double lo = ScanLower(regime, params, tech);

  std::vector<StrategyProfile> profiles = {{m0, m0, regime}};
  const double response = BestResponse(m0, regime, params, tech);
  if (!AtBoundary(response, m0)) {
    profiles.push_back({response, m0, regime});
    profiles.push_back({m0, response, regime});
  }
  const auto diagonal = [&](double m) { return surface.Marginal(m, m); };
  for (const Root& root : FindRoots(diagonal, lo, m0)) {
    if (!AtBoundary(root.value, m0)) {
      profiles.push_back({root.value, root.value, regime});
    }
  }
  if (regime == Regime::kNonSharing) {
    // Asymmetric interior stationary pairs lie on m_i * m_j = sigma^2 / 4.
    const double quarter = sigma * sigma / 4.0;
    const double from = std::max(lo, quarter / m0);
    const double to = std::min(m0, quarter / lo);
    // Clamped: quarter / (quarter / m0) can round just above m0.
    const auto locus = [&](double m) {
      return surface.Marginal(m, std::clamp(quarter / m, lo, m0));
    };
    const auto roots =
        from < to ? FindRoots(locus, from, to) : std::vector<Root>{};
    for (const Root& root : roots) {
      const double partner = quarter / root.value;
      if (NearlyEqual(root.value, partner, 1e-6)) continue;
      if (partner < lo || partner > m0) continue;
      profiles.push_back({root.value, partner, regime});
    }
  }

  std::vector<NashCandidate> equilibria;
  for (const auto& profile : profiles) {
    auto candidate = MakeCandidate(profile, params, tech, true);
    if (candidate.nash_verified) equilibria.push_back(std::move(candidate));
  }
  return equilibria;
}

BruteForceResult BruteForceNe(Regime regime, const MarketParams& params,
                              const InfoTech& tech, int grid_size,
                              double lower_fraction) {
  if (grid_size < 50) throw DomainError("brute-force grid needs >= 50 points");
  if (!(lower_fraction > 0.0 && lower_fraction < 1.0)) {
    throw DomainError("grid lower fraction must lie in (0, 1)");
  }
  const PayoffSurface surface(regime, params, tech);
  const double m0 = tech.base_noise;
  BruteForceResult result;
  // grid_size log-spaced points on [lo, m0) plus m0 exactly.
  auto& grid = result.grid;
  grid = LogGrid(lower_fraction * m0, m0, grid_size + 1);
  const std::size_t n = grid.size();

  // payoff[i * n + j] = J(grid[i], grid[j]).
  std::vector<double> payoff(n * n);
  ParallelFor(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      payoff[i * n + j] = surface.Value(grid[i], grid[j]);
    }
  });
  std::vector<std::size_t> response(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      // >= keeps the larger noise level on exact ties.
      if (payoff[i * n + j] >= payoff[best * n + j]) best = i;
    }
    response[j] = best;
  }
  // One cell of tolerance per coordinate: near m0, and between the two
  // coordinates when both sit next to the same diagonal point.
  const double cell_ratio = grid[n - 1] / grid[n - 2] * (1.0 + kRelTol);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t i = response[j];
    if (response[i] == j) {
      const StrategyProfile profile{grid[i], grid[j], regime};
      result.profiles.push_back(profile);
      auto category = CategorizeProfile(profile, m0, cell_ratio);
      if (category == NECategory::kBothInvestAsymmetric &&
          (i > j ? i - j : j - i) <= 2) {
        category = NECategory::kBothInvestSymmetric;
      }
      AddUnique(result.categories, category);
    }
  }
  return result;
}

EpsilonNeResult EpsilonNeCheck(const StrategyProfile& profile,
                               const MarketParams& params, const InfoTech& tech,
                               double eta, double delta, int grid_size) {
  if (!(eta >= 0.0) || !(delta >= 0.0)) {
    throw DomainError("payoff bounds must be non-negative");
  }
  if (grid_size < 2) throw DomainError("deviation grid needs >= 2 points");
  const PayoffSurface surface(profile.regime, params, tech);
  const double m0 = tech.base_noise;
  EpsilonNeResult result;
  result.epsilon = eta + delta;
  result.max_gain = -std::numeric_limits<double>::infinity();
  const auto deviations = LogGrid(1e-6 * m0, m0, grid_size);
  const auto check = [&](int player, double own, double rival) {
    const double base = surface.Value(own, rival);
    const double slack = 1e-12 * PayoffScale(base);
    for (double d : deviations) {
      const double gain = surface.Value(d, rival) - base;
      if (gain > result.max_gain) result.max_gain = gain;
      if (gain > result.epsilon + slack &&
          (!result.witness || gain > result.witness->gain)) {
        result.witness = EpsilonNeResult::Witness{player, d, gain};
      }
    }
  };
  check(0, profile.m_i, profile.m_j);
  check(1, profile.m_j, profile.m_i);
  result.holds = !result.witness.has_value();
  return result;
}

ExclusionResult MutuallyExclusiveCheck(const MarketParams& params,
                                       const InfoTech& tech, Regime regime,
                                       double tolerance) {
  const PayoffSurface surface(regime, params, tech);
  const double m0 = tech.base_noise;
  ExclusionResult result;
  result.m_hat = InteriorResponseToM0(regime, params, tech);
  result.boundary_is_ne =
      IsNashEquilibrium({m0, m0, regime}, params, tech, tolerance);
  if (!result.m_hat) return result;
  const double boundary_value = surface.Value(m0, m0);
  result.payoff_gap = surface.Value(*result.m_hat, m0) - boundary_value;
  result.one_sided_is_ne =
      IsNashEquilibrium({*result.m_hat, m0, regime}, params, tech, tolerance);
  const bool both = result.boundary_is_ne && result.one_sided_is_ne;
  result.knife_edge =
      both && std::abs(result.payoff_gap) <= tolerance * PayoffScale(boundary_value);
  result.holds = !both || result.knife_edge;
  return result;
}

const std::vector<NECategory>& EquilibriumReport::effective_categories() const {
  return numeric ? numeric->categories : categories;
}

namespace {

EquilibriumReport BaseReport(Regime regime, const MarketParams& params,
                             const InfoTech& tech) {
  params.RequireIdenticalProducts();
  tech.Validate();
  EquilibriumReport report;
  report.regime = regime;
  report.params = params;
  report.tech = tech;
  report.sharing_thresholds = SharingThresholds::Compute(params, tech);
  report.nonsharing_thresholds = NonSharingThresholds::Compute(params, tech);
  return report;
}

void AddCandidate(EquilibriumReport& report, const StrategyProfile& profile,
                  const ClassifyOptions& options) {
  auto candidate =
      MakeCandidate(profile, report.params, report.tech, options.verify_nash);
  if (!candidate.certified) {
    report.diagnostics.push_back(
        "candidate (" + std::to_string(profile.m_i) + ", " +
        std::to_string(profile.m_j) + ") failed its KKT certificate");
  }
  report.candidates.push_back(std::move(candidate));
}

void FillGap(EquilibriumReport& report, const ClassifyOptions& options) {
  report.categories = {NECategory::kIndeterminateByProposition};
  report.diagnostics.push_back(
      "closed-form conditions are silent here; categories below are numeric");
  NumericFallback fallback;
  fallback.equilibria =
      NumericEquilibria(report.regime, report.params, report.tech);
  for (const auto& eq : fallback.equilibria) {
    AddUnique(fallback.categories, eq.category);
  }
  if (options.fallback_grid > 0) {
    fallback.grid = BruteForceNe(report.regime, report.params, report.tech,
                                 options.fallback_grid);
  }
  report.numeric = std::move(fallback);
}

}  // namespace

EquilibriumReport ClassifySharing(const MarketParams& params,
                                  const InfoTech& tech,
                                  const ClassifyOptions& options) {
  auto report = BaseReport(Regime::kSharing, params, tech);
  const auto& th = report.sharing_thresholds;
  const double sigma = tech.cost_variance;
  const double m0 = tech.base_noise;

  if (!th.sigma_tilde) {
    report.proposition_case = "m0 <= 36b/ln(alpha): neither invests";
    report.categories = {NECategory::kNeitherInvests};
    AddCandidate(report, {m0, m0, Regime::kSharing}, options);
  } else if (sigma < *th.sigma_tilde) {
    report.proposition_case =
        "m0 > 36b/ln(alpha) and sigma < sigma_tilde: neither invests";
    report.categories = {NECategory::kNeitherInvests};
    AddCandidate(report, {m0, m0, Regime::kSharing}, options);
  } else if (sigma >= *th.sigma_hat_thr) {
    report.proposition_case =
        "m0 >= 36b/ln(alpha) and sigma >= sigma_hat_thr: one insurer invests";
    report.categories = {NECategory::kOneInvests};
    const auto roots = SharingInteriorCandidates(params, tech);
    if (roots.empty()) {
      throw InternalError("no interior stationary point above sigma_hat_thr");
    }
    const double m_hat = roots.front();
    AddCandidate(report, {m_hat, m0, Regime::kSharing}, options);
    AddCandidate(report, {m0, m_hat, Regime::kSharing}, options);
  } else {
    report.proposition_case = "sigma_tilde <= sigma < sigma_hat_thr: gap";
    FillGap(report, options);
  }
  return report;
}

EquilibriumReport ClassifyNonSharing(const MarketParams& params,
                                     const InfoTech& tech,
                                     const ClassifyOptions& options) {
  auto report = BaseReport(Regime::kNonSharing, params, tech);
  const auto& th = report.nonsharing_thresholds;
  const double sigma = tech.cost_variance;
  const double m0 = tech.base_noise;

  if (m0 <= th.m0_low || !th.sigma_acute) {
    report.proposition_case =
        "m0 <= 27b/(5 ln(alpha)): (m0, m0) is the only equilibrium";
    report.categories = {NECategory::kNeitherInvests};
    AddCandidate(report, {m0, m0, Regime::kNonSharing}, options);
  } else if (sigma <= *th.sigma_acute) {
    report.proposition_case =
        "sigma <= sigma_acute: (m0, m0) is the only feasible equilibrium";
    report.categories = {NECategory::kNeitherInvests};
    AddCandidate(report, {m0, m0, Regime::kNonSharing}, options);
  } else if (m0 > th.m0_mid && th.sigma_breve && sigma >= *th.sigma_breve) {
    report.proposition_case =
        "m0 > 9b/ln(alpha) and sigma >= sigma_breve: one or both invest";
    report.categories = {NECategory::kOneInvests,
                         NECategory::kBothInvestSymmetric};
    if (const auto m_hat =
            InteriorResponseToM0(Regime::kNonSharing, params, tech)) {
      AddCandidate(report, {*m_hat, m0, Regime::kNonSharing}, options);
      AddCandidate(report, {m0, *m_hat, Regime::kNonSharing}, options);
    } else {
      report.diagnostics.push_back("no interior response to m0 was found");
    }
    if (const auto m_sym =
            SymmetricInteriorPoint(Regime::kNonSharing, params, tech)) {
      AddCandidate(report, {*m_sym, *m_sym, Regime::kNonSharing}, options);
    } else {
      report.diagnostics.push_back("no symmetric interior maximum was found");
    }
  } else {
    report.proposition_case = "sigma_acute < sigma < sigma_breve: gap";
    FillGap(report, options);
  }
  return report;
}

EquilibriumReport Classify(Regime regime, const MarketParams& params,
                           const InfoTech& tech,
                           const ClassifyOptions& options) {
  return regime == Regime::kSharing ? ClassifySharing(params, tech, options)
                                    : ClassifyNonSharing(params, tech, options);
}

OracleComparison CompareWithGrid(const EquilibriumReport& report,
                                 const BruteForceResult& grid, double cells) {
  OracleComparison out;
  out.grid_categories = grid.categories;
  if (grid.profiles.empty()) out.issues.push_back("grid has no equilibrium");
  const auto& expected = report.effective_categories();
  for (NECategory c : grid.categories) {
    if (std::find(expected.begin(), expected.end(), c) == expected.end()) {
      out.issues.push_back("grid category " + std::string(CategoryName(c)) +
                           " not predicted");
    }
  }
  // Log width of one grid cell.
  const std::size_t n = grid.grid.size();
  const double cell =
      n > 2 ? std::log(grid.grid[n - 2] / grid.grid[0]) / (n - 2) : 1.0;
  const double reach = cells * cell + 1e-12;
  std::vector<NashCandidate> verified = report.candidates;
  if (report.numeric) {
    verified.insert(verified.end(), report.numeric->equilibria.begin(),
                    report.numeric->equilibria.end());
  }
  for (const auto& candidate : verified) {
    if (!candidate.nash_verified) continue;
    const auto& p = candidate.profile;
    const bool found = std::any_of(
        grid.profiles.begin(), grid.profiles.end(), [&](const auto& g) {
          return std::abs(std::log(g.m_i / p.m_i)) <= reach &&
                 std::abs(std::log(g.m_j / p.m_j)) <= reach;
        });
    if (!found) {
      out.issues.push_back("no grid equilibrium near (" +
                           std::to_string(p.m_i) + ", " +
                           std::to_string(p.m_j) + ")");
    }
  }
  out.agrees = out.issues.empty();
  return out;
}

}  // namespace cyberins
