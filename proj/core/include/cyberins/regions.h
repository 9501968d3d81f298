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

#ifndef CYBERINS_REGIONS_H_
#define CYBERINS_REGIONS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cyberins/equilibrium.h"

namespace cyberins {

// Small set of NE categories, stored as bits.
class CategorySet {
 public:
  CategorySet() = default;
  explicit CategorySet(const std::vector<NECategory>& categories);

  void Add(NECategory category);
  bool Has(NECategory category) const;
  bool empty() const { return bits_ == 0; }
  bool Only(NECategory category) const;
  bool Investing() const;
  // "OneInvests|BothInvestSymmetric", or "none" when empty.
  std::string ToString() const;

  friend bool operator==(CategorySet lhs, CategorySet rhs) {
    return lhs.bits_ == rhs.bits_;
  }

 private:
  std::uint8_t bits_ = 0;
};

enum class ComparisonLabel { kSame, kRegionA, kRegionB, kOther };
std::string_view ComparisonLabelName(ComparisonLabel label);

// Region A: sharing leaves only (m0, m0) while no sharing admits investment.
// Region B: sharing admits only free riding while no sharing admits (m, m).
ComparisonLabel CompareRegimes(CategorySet sharing, CategorySet nonsharing);

struct RegionConfig {
  double sigma_min = 1.0;
  double sigma_max = 1000.0;
  double m0_min = 1.0;
  double m0_max = 200.0;
  int sigma_points = 200;
  int m0_points = 200;
  bool linear = false;  // geometric spacing unless set

  void Validate() const;
};

struct RegimeCell {
  CategorySet categories;
  bool gap = false;  // categories come from the numeric fallback
};

struct RegionGrid {
  std::vector<double> sigma_axis;
  std::vector<double> m0_axis;
  // Row-major by m0, then sigma. Empty when the regime was not evaluated.
  std::vector<RegimeCell> sharing;
  std::vector<RegimeCell> nonsharing;
  std::vector<ComparisonLabel> comparison;

  std::size_t size() const { return sigma_axis.size() * m0_axis.size(); }
  std::size_t Index(std::size_t sigma_idx, std::size_t m0_idx) const {
    return m0_idx * sigma_axis.size() + sigma_idx;
  }
  // Cell nearest to (sigma, m0), in log distance for geometric axes.
  std::size_t NearestCell(double sigma, double m0) const;
};

// Classifies every (sigma, m0) cell for one regime. `params` and `efficacy`
// fix a, b, d and alpha; sigma and m0 come from the axes.
RegionGrid RegionMap(const RegionConfig& config, Regime regime,
                     const MarketParams& params, double efficacy);

// Both regimes plus the comparison labels.
RegionGrid RegimeComparison(const RegionConfig& config,
                            const MarketParams& params, double efficacy);

struct RegionSummary {
  std::size_t cells = 0;
  std::size_t same = 0;
  std::size_t region_a = 0;
  std::size_t region_b = 0;
  std::size_t other = 0;
  std::size_t gap_sharing = 0;
  std::size_t gap_nonsharing = 0;

  double Fraction(std::size_t count) const {
    return cells == 0 ? 0.0 : static_cast<double>(count) / cells;
  }
};

RegionSummary Summarize(const RegionGrid& grid);

// One row per cell: sigma,m0,category_sharing,category_nonsharing,
// comparison_label,gap_flag.
void WriteRegionCsv(const RegionGrid& grid, std::ostream& out);

}  // namespace cyberins

#endif  // CYBERINS_REGIONS_H_
