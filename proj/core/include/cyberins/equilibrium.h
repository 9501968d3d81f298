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

#ifndef CYBERINS_EQUILIBRIUM_H_
#define CYBERINS_EQUILIBRIUM_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyberins/market.h"
#include "cyberins/payoff.h"

namespace cyberins {

enum class NECategory {
  kNeitherInvests,             // (m0, m0)
  kOneInvests,                 // (m, m0) and its mirror
  kBothInvestSymmetric,        // (m, m), m < m0
  kBothInvestAsymmetric,       // (m_i, m_j), both < m0, m_i != m_j
  kIndeterminateByProposition  // closed-form conditions are silent
};

std::string_view CategoryName(NECategory category);

// Threshold values of the sharing regime. The sigma thresholds only exist when
// m0 * ln(alpha) > 36 b.
struct SharingThresholds {
  double m0_crit = 0.0;                 // 36 b / ln(alpha)
  std::optional<double> sigma_tilde;    // 36 b m0 / (m0 ln(alpha) - 36 b)
  double gamma = 0.0;                   // sqrt(m0 ln(alpha) / (9 b))
  std::optional<double> sigma_hat_thr;  // m0 / (gamma - 2)

  static SharingThresholds Compute(const MarketParams& params,
                                   const InfoTech& tech);
};

struct NonSharingThresholds {
  double m0_low = 0.0;               // 27 b / (5 ln(alpha))
  double m0_mid = 0.0;               // 9 b / ln(alpha)
  double gamma_tilde = 0.0;          // 5 m0 ln(alpha) / (3 b)
  double gamma_hat = 0.0;            // m0 ln(alpha) / b
  std::optional<double> sigma_acute; // 2 m0 / (sqrt(gamma_tilde) - 3)
  std::optional<double> sigma_breve; // 2 m0 / (sqrt(gamma_hat) - 3)

  static NonSharingThresholds Compute(const MarketParams& params,
                                      const InfoTech& tech);
};

enum class KktCase { kInteriorFoc, kBoundaryM0, kInfeasible };
std::string_view KktCaseName(KktCase kkt_case);

// Local optimality of m_i for insurer i against m_j, by the KKT conditions of
// max J_i(., m_j) over (0, m0].
struct FeasibilityCertificate {
  StrategyProfile point;
  KktCase kkt_case = KktCase::kInfeasible;
  double foc_residual = 0.0;  // J_i'(m_i, m_j)
  double soc_value = 0.0;     // J_i''(m_i, m_j)
};

FeasibilityCertificate KktFeasible(double m_i, double m_j, Regime regime,
                                   const MarketParams& params,
                                   const InfoTech& tech);

// Roots in (0, m0] of the quadratic whose roots are the stationary points of
// J_i(., m0) under sharing, in increasing order. The smaller root is a local
// maximum, the larger one a local minimum.
std::vector<double> SharingInteriorCandidates(const MarketParams& params,
                                              const InfoTech& tech);

bool FreeRiderLocusFeasible(double m, double sigma, double m0);
bool SymmetricLocusFeasible(double m, double sigma);

// Stationary points of J_i(., m_j) that are local maxima, plus m0 when the
// marginal there is non-negative.
std::vector<double> ResponseCandidates(double m_j, Regime regime,
                                       const MarketParams& params,
                                       const InfoTech& tech);

// Global maximizer of J_i(., m_j) over the KKT candidate set. Payoff ties are
// broken toward m0 (no investment).
double BestResponse(double m_j, Regime regime, const MarketParams& params,
                    const InfoTech& tech);

// True when neither insurer gains more than `tolerance` (relative to the
// payoff scale) by deviating to its best response.
bool IsNashEquilibrium(const StrategyProfile& profile,
                       const MarketParams& params, const InfoTech& tech,
                       double tolerance = kRelTol);

// Category of an exact profile; `cell_ratio` widens the comparisons to one
// log-grid cell for profiles read off a grid.
NECategory CategorizeProfile(const StrategyProfile& profile, double m0,
                             double cell_ratio = 1.0 + kRelTol);

struct NashCandidate {
  StrategyProfile profile;
  NECategory category = NECategory::kNeitherInvests;
  FeasibilityCertificate certificate_i;
  FeasibilityCertificate certificate_j;
  // KKT holds for every insurer that invests, or for both at (m0, m0).
  bool certified = false;
  bool nash_verified = false;   // global best-response check
  double payoff_i = 0.0;
  double payoff_j = 0.0;
};

NashCandidate MakeCandidate(const StrategyProfile& profile,
                            const MarketParams& params, const InfoTech& tech,
                            bool verify_nash);

// Enumerates exact equilibria numerically: (m0, m0), the best response to m0,
// symmetric stationary points and, without sharing, the free-rider locus
// m_j = sigma^2 / (4 m_i). Only profiles that pass the global best-response
// check are returned.
std::vector<NashCandidate> NumericEquilibria(Regime regime,
                                             const MarketParams& params,
                                             const InfoTech& tech);

struct BruteForceResult {
  std::vector<double> grid;  // log-spaced, last element exactly m0
  std::vector<StrategyProfile> profiles;
  std::vector<NECategory> categories;  // distinct, in enum order
};

// Independent oracle: exhaustive best-response search on a log-spaced grid of
// grid_size points in [lower_fraction * m0, m0) plus m0 itself.
BruteForceResult BruteForceNe(Regime regime, const MarketParams& params,
                              const InfoTech& tech, int grid_size,
                              double lower_fraction = 1e-4);

struct EpsilonNeResult {
  double epsilon = 0.0;
  double max_gain = 0.0;  // largest unilateral improvement found
  bool holds = true;
  struct Witness {
    int player = 0;  // 0 for insurer i, 1 for insurer j
    double deviation = 0.0;
    double gain = 0.0;
  };
  std::optional<Witness> witness;
};

// Checks that no unilateral deviation on a log grid (plus m0) improves the
// payoff by more than epsilon = eta + delta.
EpsilonNeResult EpsilonNeCheck(const StrategyProfile& profile,
                               const MarketParams& params, const InfoTech& tech,
                               double eta, double delta,
                               int grid_size = 2000);

struct ExclusionResult {
  bool holds = true;
  bool knife_edge = false;
  bool boundary_is_ne = false;    // (m0, m0)
  bool one_sided_is_ne = false;   // (m_hat, m0)
  std::optional<double> m_hat;
  double payoff_gap = 0.0;        // J(m_hat, m0) - J(m0, m0)
};

// (m_hat, m0) and (m0, m0) may both be equilibria only when they pay the same.
ExclusionResult MutuallyExclusiveCheck(const MarketParams& params,
                                       const InfoTech& tech, Regime regime,
                                       double tolerance = kRelTol);

struct ClassifyOptions {
  bool verify_nash = true;     // run global best-response checks
  int fallback_grid = 200;     // 0 disables the grid oracle in the gap
};

struct NumericFallback {
  std::vector<NECategory> categories;
  std::vector<NashCandidate> equilibria;
  std::optional<BruteForceResult> grid;
};

struct EquilibriumReport {
  Regime regime = Regime::kSharing;
  MarketParams params;
  InfoTech tech;
  // Outcome of the closed-form conditions: the set of feasible categories, or
  // {kIndeterminateByProposition} inside a gap.
  std::vector<NECategory> categories;
  std::string proposition_case;
  SharingThresholds sharing_thresholds;
  NonSharingThresholds nonsharing_thresholds;
  std::vector<NashCandidate> candidates;
  std::optional<NumericFallback> numeric;
  std::vector<std::string> diagnostics;

  bool in_gap() const { return numeric.has_value(); }
  // Categories to use downstream: the proposition set, or the numeric set in a
  // gap.
  const std::vector<NECategory>& effective_categories() const;
};

EquilibriumReport ClassifySharing(const MarketParams& params,
                                  const InfoTech& tech,
                                  const ClassifyOptions& options = {});
EquilibriumReport ClassifyNonSharing(const MarketParams& params,
                                     const InfoTech& tech,
                                     const ClassifyOptions& options = {});
EquilibriumReport Classify(Regime regime, const MarketParams& params,
                           const InfoTech& tech,
                           const ClassifyOptions& options = {});

// Agreement between a classification and the grid oracle: the grid finds at
// least one equilibrium, every grid category is among the report's categories,
// and every Nash-verified closed-form candidate has a grid equilibrium within
// `cells` grid cells of it.
struct OracleComparison {
  bool agrees = false;
  std::vector<NECategory> grid_categories;
  std::vector<std::string> issues;
};

OracleComparison CompareWithGrid(const EquilibriumReport& report,
                                 const BruteForceResult& grid,
                                 double cells = 2.0);

// The symmetric stationary point (m, m) with m < m0 that is a local maximum
// for each insurer, if any.
std::optional<double> SymmetricInteriorPoint(Regime regime,
                                             const MarketParams& params,
                                             const InfoTech& tech);

}  // namespace cyberins

#endif  // CYBERINS_EQUILIBRIUM_H_
