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

#include "gtcorners/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "gtcorners/errors.hpp"
#include "gtcorners/geometry.hpp"

namespace gtcorners {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

SampleSet::SampleSet(int k, std::vector<double> rows, std::vector<double> spectrum,
                     std::uint64_t seed)
    : k_(k), rows_(std::move(rows)), spectrum_(std::move(spectrum)), seed_(seed) {
  if (k_ < 1) fail(errc::invalid_argument, "sample dimension must be >= 1");
  if (rows_.size() % std::size_t(k_) != 0)
    fail(errc::dimension_mismatch, "sample buffer size is not a multiple of K");
  for (std::int64_t i = 0; i < count(); ++i)
    if (!is_weakly_increasing(row(i)))
      fail(errc::invalid_argument, "sample row " + std::to_string(i) + " is not weakly increasing");
}

double ks_statistic_1d(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.size() < 10) fail(errc::invalid_argument, "KS statistic needs at least 10 samples");
  std::sort(samples.begin(), samples.end());
  const double n = double(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    // sup over [x_i, x_{i+1}) and (x_{i-1}, x_i): the left limit is probed at
    // the previous double, which is exact for jumps located at sample points
    const double above = double(i + 1) / n - cdf(samples[i]);
    const double below = cdf(std::nextafter(samples[i], -kInf)) - double(i) / n;
    d = std::max({d, above, below});
  }
  return d;
}

double grid_cdf_discrepancy(const SampleSet& samples, const CornerDensity& density,
                            const std::vector<std::vector<double>>& grid) {
  const int k = density.corner_size();
  if (samples.k() != k) fail(errc::dimension_mismatch, "sample dimension differs from K");
  const double x_lo = density.spectrum().front(), x_hi = density.spectrum().back();
  const double n = double(samples.count());
  if (samples.count() < 1) fail(errc::invalid_argument, "empty sample set");
  double worst = 0.0;
  std::vector<double> caps(k), lower(k, -kInf);
  for (const std::vector<double>& t : grid) {
    if (int(t.size()) != k) fail(errc::dimension_mismatch, "grid point must have length K");
    for (double v : t)
      if (!(v >= x_lo && v <= x_hi))
        fail(errc::invalid_argument, "grid point outside the spectrum range");
    // ordered rows satisfy a_j <= t_j for all j iff a_j <= min_{r>=j} t_r
    for (int j = k; j-- > 0;) caps[j] = std::min(t[j], j + 1 < k ? caps[j + 1] : kInf);
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples.count(); ++i) {
      std::span<const double> r = samples.row(i);
      bool inside = true;
      for (int j = 0; j < k && inside; ++j) inside = r[j] <= t[j];
      hits += inside;
    }
    const double model = density.region_probability(lower, caps);
    worst = std::max(worst, std::abs(double(hits) / n - model));
  }
  return worst;
}

std::vector<std::vector<int>> knot_cell_partition(int ncells, int k) {
  if (ncells < 1 || k < 1) fail(errc::invalid_argument, "partition needs ncells >= 1, k >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  while (true) {
    out.push_back(cur);
    int j = k - 1;
    while (j >= 0 && cur[j] == ncells - 1) --j;
    if (j < 0) break;
    const int next = cur[j] + 1;
    for (int r = j; r < k; ++r) cur[r] = next;
  }
  return out;
}

Chi2Result histogram_chi2(const SampleSet& samples, const CornerDensity& density,
                          const std::vector<std::vector<int>>& bins) {
  const int k = density.corner_size();
  if (samples.k() != k) fail(errc::dimension_mismatch, "sample dimension differs from K");
  if (bins.empty()) fail(errc::invalid_argument, "bin list is empty");
  const std::vector<double>& x = density.spectrum();
  const int ncells = int(x.size()) - 1;
  const double n = double(samples.count());

  std::map<std::vector<int>, std::size_t> bin_of;
  std::vector<double> expected(bins.size(), 0.0);
  std::vector<std::int64_t> observed(bins.size(), 0);
  for (std::size_t b = 0; b < bins.size(); ++b) {
    expected[b] = n * density.cell_probability(bins[b]);
    bin_of[bins[b]] = b;
  }
  std::vector<int> cells(k);
  for (std::int64_t i = 0; i < samples.count(); ++i) {
    std::span<const double> r = samples.row(i);
    for (int j = 0; j < k; ++j) {
      const auto it = std::upper_bound(x.begin(), x.end(), r[j]);
      cells[j] = std::clamp(int(it - x.begin()) - 1, 0, ncells - 1);
    }
    const auto found = bin_of.find(cells);
    if (found == bin_of.end())
      fail(errc::invalid_argument, "sample falls outside the provided bin partition");
    ++observed[found->second];
  }

  // merge consecutive bins until each retained group expects >= 5
  std::vector<double> group_expected;
  std::vector<std::int64_t> group_observed;
  double acc_e = 0.0;
  std::int64_t acc_o = 0;
  for (std::size_t b = 0; b < bins.size(); ++b) {
    acc_e += expected[b];
    acc_o += observed[b];
    if (acc_e >= 5.0) {
      group_expected.push_back(acc_e);
      group_observed.push_back(acc_o);
      acc_e = 0.0;
      acc_o = 0;
    }
  }
  if (acc_e > 0.0 || acc_o > 0) {
    if (group_expected.empty()) {
      group_expected.push_back(acc_e);
      group_observed.push_back(acc_o);
    } else {
      group_expected.back() += acc_e;
      group_observed.back() += acc_o;
    }
  }
  if (group_expected.size() < 2)
    fail(errc::invalid_argument, "fewer than 2 bins retained after merging");
  double statistic = 0.0;
  for (std::size_t g = 0; g < group_expected.size(); ++g) {
    const double delta = double(group_observed[g]) - group_expected[g];
    statistic += delta * delta / group_expected[g];
  }
  return {statistic, int(group_expected.size()) - 1};
}

namespace {

// regularized lower incomplete gamma P(a, x), series + continued fraction
double gammp(double a, double x) {
  if (x < 0.0 || a <= 0.0) fail(errc::invalid_argument, "incomplete gamma domain error");
  if (x == 0.0) return 0.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lg);
  }
  // Lentz continued fraction for Q(a, x)
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -double(i) * (double(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  const double q = std::exp(-x + a * std::log(x) - lg) * h;
  return 1.0 - q;
}

}  // namespace

double chi_squared_cdf(double statistic, int dof) {
  if (dof < 1) fail(errc::invalid_argument, "degrees of freedom must be >= 1");
  if (statistic <= 0.0) return 0.0;
  return gammp(0.5 * dof, 0.5 * statistic);
}

}  // namespace gtcorners
