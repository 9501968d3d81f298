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

#include "cyberins/regions.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace cyberins {

namespace {

constexpr std::array<NECategory, 5> kAllCategories = {
    NECategory::kNeitherInvests, NECategory::kOneInvests,
    NECategory::kBothInvestSymmetric, NECategory::kBothInvestAsymmetric,
    NECategory::kIndeterminateByProposition};

std::uint8_t Bit(NECategory category) {
  return static_cast<std::uint8_t>(1u << static_cast<unsigned>(category));
}

std::vector<double> Axis(double lo, double hi, int points, bool linear) {
  std::vector<double> axis(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double t = static_cast<double>(k) / (points - 1);
    axis[static_cast<std::size_t>(k)] =
        linear ? lo + t * (hi - lo) : lo * std::pow(hi / lo, t);
  }
  axis.front() = lo;
  axis.back() = hi;
  return axis;
}

bool IsGeometric(const std::vector<double>& axis) {
  if (axis.size() < 3) return true;
  const double r0 = axis[1] / axis[0];
  const double r1 = axis[2] / axis[1];
  return std::abs(r0 - r1) <= 1e-9 * r0;
}

std::size_t Nearest(const std::vector<double>& axis, double value) {
  const bool log_scale = IsGeometric(axis);
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < axis.size(); ++k) {
    const double dist = log_scale ? std::abs(std::log(axis[k] / value))
                                  : std::abs(axis[k] - value);
    if (dist < best_dist) {
      best = k;
      best_dist = dist;
    }
  }
  return best;
}

RegimeCell ClassifyCell(Regime regime, const MarketParams& params,
                        double efficacy, double sigma, double m0) {
  const InfoTech tech{sigma, m0, efficacy};
  ClassifyOptions options;
  options.verify_nash = false;
  options.fallback_grid = 0;
  const auto report = Classify(regime, params, tech, options);
  RegimeCell cell;
  cell.gap = report.in_gap();
  cell.categories = CategorySet(report.effective_categories());
  return cell;
}

RegionGrid MakeAxes(const RegionConfig& config) {
  config.Validate();
  RegionGrid grid;
  grid.sigma_axis = Axis(config.sigma_min, config.sigma_max,
                         config.sigma_points, config.linear);
  grid.m0_axis =
      Axis(config.m0_min, config.m0_max, config.m0_points, config.linear);
  return grid;
}

void FillRegime(RegionGrid& grid, Regime regime, const MarketParams& params,
                double efficacy) {
  auto& cells = regime == Regime::kSharing ? grid.sharing : grid.nonsharing;
  cells.assign(grid.size(), RegimeCell{});
  ParallelFor(grid.size(), [&](std::size_t index) {
    const std::size_t sigma_idx = index % grid.sigma_axis.size();
    const std::size_t m0_idx = index / grid.sigma_axis.size();
    cells[index] = ClassifyCell(regime, params, efficacy,
                                grid.sigma_axis[sigma_idx],
                                grid.m0_axis[m0_idx]);
  });
}

std::string FormatNumber(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

}  // namespace

CategorySet::CategorySet(const std::vector<NECategory>& categories) {
  for (NECategory c : categories) Add(c);
}

void CategorySet::Add(NECategory category) { bits_ |= Bit(category); }

bool CategorySet::Has(NECategory category) const {
  return (bits_ & Bit(category)) != 0;
}

bool CategorySet::Only(NECategory category) const {
  return bits_ == Bit(category);
}

bool CategorySet::Investing() const {
  return Has(NECategory::kOneInvests) ||
         Has(NECategory::kBothInvestSymmetric) ||
         Has(NECategory::kBothInvestAsymmetric);
}

std::string CategorySet::ToString() const {
  if (empty()) return "none";
  std::string out;
  for (NECategory c : kAllCategories) {
    if (!Has(c)) continue;
    if (!out.empty()) out += '|';
    out += CategoryName(c);
  }
  return out;
}

std::string_view ComparisonLabelName(ComparisonLabel label) {
  switch (label) {
    case ComparisonLabel::kSame:
      return "Same";
    case ComparisonLabel::kRegionA:
      return "A";
    case ComparisonLabel::kRegionB:
      return "B";
    case ComparisonLabel::kOther:
      return "Other";
  }
  return "Other";
}

ComparisonLabel CompareRegimes(CategorySet sharing, CategorySet nonsharing) {
  if (sharing.Only(NECategory::kNeitherInvests) && nonsharing.Investing()) {
    return ComparisonLabel::kRegionA;
  }
  if (sharing.Only(NECategory::kOneInvests) &&
      nonsharing.Has(NECategory::kBothInvestSymmetric)) {
    return ComparisonLabel::kRegionB;
  }
  return sharing == nonsharing ? ComparisonLabel::kSame
                               : ComparisonLabel::kOther;
}

void RegionConfig::Validate() const {
  if (!(sigma_min > 0.0) || !(sigma_max > sigma_min)) {
    throw DomainError("sigma range must be positive and increasing");
  }
  if (!(m0_min > 0.0) || !(m0_max > m0_min)) {
    throw DomainError("m0 range must be positive and increasing");
  }
  if (sigma_points < 2 || m0_points < 2) {
    throw DomainError("region resolution must be at least 2 per axis");
  }
}

std::size_t RegionGrid::NearestCell(double sigma, double m0) const {
  return Index(Nearest(sigma_axis, sigma), Nearest(m0_axis, m0));
}

RegionGrid RegionMap(const RegionConfig& config, Regime regime,
                     const MarketParams& params, double efficacy) {
  params.RequireIdenticalProducts();
  auto grid = MakeAxes(config);
  FillRegime(grid, regime, params, efficacy);
  return grid;
}

RegionGrid RegimeComparison(const RegionConfig& config,
                            const MarketParams& params, double efficacy) {
  params.RequireIdenticalProducts();
  auto grid = MakeAxes(config);
  FillRegime(grid, Regime::kSharing, params, efficacy);
  FillRegime(grid, Regime::kNonSharing, params, efficacy);
  grid.comparison.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid.comparison[k] = CompareRegimes(grid.sharing[k].categories,
                                        grid.nonsharing[k].categories);
  }
  return grid;
}

RegionSummary Summarize(const RegionGrid& grid) {
  RegionSummary s;
  s.cells = grid.size();
  for (const auto label : grid.comparison) {
    switch (label) {
      case ComparisonLabel::kSame:
        ++s.same;
        break;
      case ComparisonLabel::kRegionA:
        ++s.region_a;
        break;
      case ComparisonLabel::kRegionB:
        ++s.region_b;
        break;
      case ComparisonLabel::kOther:
        ++s.other;
        break;
    }
  }
  for (const auto& cell : grid.sharing) s.gap_sharing += cell.gap ? 1 : 0;
  for (const auto& cell : grid.nonsharing) s.gap_nonsharing += cell.gap ? 1 : 0;
  return s;
}

void WriteRegionCsv(const RegionGrid& grid, std::ostream& out) {
  out << "sigma,m0,category_sharing,category_nonsharing,comparison_label,"
         "gap_flag\n";
  for (std::size_t m = 0; m < grid.m0_axis.size(); ++m) {
    for (std::size_t s = 0; s < grid.sigma_axis.size(); ++s) {
      const std::size_t k = grid.Index(s, m);
      const bool has_sharing = !grid.sharing.empty();
      const bool has_nonsharing = !grid.nonsharing.empty();
      const bool gap_s = has_sharing && grid.sharing[k].gap;
      const bool gap_n = has_nonsharing && grid.nonsharing[k].gap;
      out << FormatNumber(grid.sigma_axis[s]) << ','
          << FormatNumber(grid.m0_axis[m]) << ','
          << (has_sharing ? grid.sharing[k].categories.ToString() : "") << ','
          << (has_nonsharing ? grid.nonsharing[k].categories.ToString() : "")
          << ','
          << (grid.comparison.empty()
                  ? ""
                  : std::string(ComparisonLabelName(grid.comparison[k])))
          << ','
          << (gap_s && gap_n ? "both"
              : gap_s        ? "sharing"
              : gap_n        ? "nonsharing"
                             : "none")
          << '\n';
    }
  }
}

}  // namespace cyberins
