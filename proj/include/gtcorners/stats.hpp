// Copyright 2026 The gtcorners Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GTCORNERS_STATS_HPP
#define GTCORNERS_STATS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gtcorners/density.hpp"

namespace gtcorners {

/// Immutable batch of K-dimensional sample rows; every row is validated as
/// weakly increasing at construction.
class SampleSet {
 public:
  /// rows is row-major, count * k entries.
  SampleSet(int k, std::vector<double> rows, std::vector<double> spectrum = {},
            std::uint64_t seed = 0);

  int k() const { return k_; }
  std::int64_t count() const { return std::int64_t(rows_.size()) / k_; }
  std::span<const double> row(std::int64_t i) const {
    return std::span(rows_).subspan(std::size_t(i) * k_, k_);
  }
  const std::vector<double>& spectrum() const { return spectrum_; }
  std::uint64_t seed() const { return seed_; }

 private:
  int k_;
  std::vector<double> rows_;
  std::vector<double> spectrum_;
  std::uint64_t seed_;
};

/// Sup-norm distance between the empirical CDF of the samples and a model
/// CDF.  The model is probed from the left through the previous representable
/// double, so step-function models are handled exactly.  Needs >= 10 samples.
double ks_statistic_1d(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Max over grid points t of |empirical P(row <= t coordinatewise) - model
/// probability|, the model value by exact cell-wise quadrature of the density.
/// Grid points must lie in [x_1, x_N]^K.
double grid_cdf_discrepancy(const SampleSet& samples, const CornerDensity& density,
                            const std::vector<std::vector<double>>& grid);

struct Chi2Result {
  double statistic;
  int dof;
};

/// Pearson chi-square of observed bin counts against exact bin probabilities.
/// Bins are knot-cell assignments (weakly increasing tuples of cell indices);
/// consecutive bins with expected count < 5 are merged.  Fewer than 2 retained
/// bins is an argument error.
Chi2Result histogram_chi2(const SampleSet& samples, const CornerDensity& density,
                          const std::vector<std::vector<int>>& bins);

/// All weakly increasing assignments of k variables to cells 0..ncells-1,
/// in lexicographic order: the canonical full partition for histogram_chi2.
std::vector<std::vector<int>> knot_cell_partition(int ncells, int k);

/// CDF of the chi-square distribution (regularized lower incomplete gamma).
double chi_squared_cdf(double statistic, int dof);

}  // namespace gtcorners

#endif  // GTCORNERS_STATS_HPP
