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

#include "gtcorners/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "gtcorners/errors.hpp"

namespace gtcorners {

namespace {

GaussLegendreRule compute_gauss_legendre(int q) {
  GaussLegendreRule rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  const int half = (q + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_q from the Chebyshev-based initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= q; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[q - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[q - 1 - i] = w;
  }
  if (q % 2 == 1) rule.nodes[q / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int q) {
  if (q < 1 || q > 1024) fail(errc::invalid_argument, "quadrature rule size out of range");
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, compute_gauss_legendre(q)).first;
  return it->second;
}

double integrate_interval(const std::function<double(double)>& f, double lo, double hi,
                          int points) {
  const GaussLegendreRule& rule = gauss_legendre(points);
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (int i = 0; i < points; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

OrderedRegion make_region(std::span<const double> base_cuts, std::span<const double> lower,
                          std::span<const double> upper) {
  if (base_cuts.size() < 2 || !std::is_sorted(base_cuts.begin(), base_cuts.end()))
    fail(errc::invalid_argument, "region needs at least 2 sorted cut points");
  if (lower.size() != upper.size())
    fail(errc::dimension_mismatch, "per-variable bound lists differ in length");
  const double lo_all = base_cuts.front(), hi_all = base_cuts.back();

  OrderedRegion region;
  region.cuts.assign(base_cuts.begin(), base_cuts.end());
  for (double b : lower)
    if (b > lo_all && b < hi_all) region.cuts.push_back(b);
  for (double b : upper)
    if (b > lo_all && b < hi_all) region.cuts.push_back(b);
  std::sort(region.cuts.begin(), region.cuts.end());
  region.cuts.erase(std::unique(region.cuts.begin(), region.cuts.end()), region.cuts.end());

  const auto cell_from = [&](double bound) {
    // first cell starting at or after `bound`
    const auto it = std::lower_bound(region.cuts.begin(), region.cuts.end(), bound);
    return int(it - region.cuts.begin());
  };
  const int ncells = int(region.cuts.size()) - 1;
  for (std::size_t j = 0; j < lower.size(); ++j) {
    const double lo = std::max(lower[j], lo_all);
    const double hi = std::min(upper[j], hi_all);
    region.lo_cell.push_back(lo >= hi_all ? ncells : cell_from(lo));
    region.hi_cell.push_back(hi <= lo_all ? -1 : cell_from(hi) - 1);
  }
  return region;
}

namespace {

struct CellTensor {
  const OrderedRegion& region;
  const GaussLegendreRule& rule;
  const std::function<double(std::span<const double>)>& f;
  int k;
  std::vector<int> cells;
  std::vector<double> point;
  std::uint64_t evaluations = 0;
  std::uint64_t budget;
  double total = 0.0;

  // weight 1/prod m_b! over blocks of equal cells
  double block_weight() const {
    double w = 1.0;
    int run = 1;
    for (int j = 1; j < k; ++j) {
      if (cells[j] == cells[j - 1]) {
        ++run;
        w /= run;
      } else {
        run = 1;
      }
    }
    return w;
  }

  void tensor(int axis, double acc) {
    if (axis == k) {
      total += acc * f(point);
      return;
    }
    const double lo = region.cuts[cells[axis]], hi = region.cuts[cells[axis] + 1];
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      point[axis] = mid + half * rule.nodes[i];
      tensor(axis + 1, acc * half * rule.weights[i]);
    }
  }

  void assign(int axis, int min_cell) {
    if (axis == k) {
      const std::uint64_t cost = std::uint64_t(std::pow(double(rule.nodes.size()), k));
      evaluations += cost;
      if (evaluations > budget)
        fail(errc::resource_limit, "quadrature evaluation budget exceeded");
      tensor(0, block_weight());
      return;
    }
    for (int c = std::max(min_cell, region.lo_cell[axis]); c <= region.hi_cell[axis]; ++c) {
      cells[axis] = c;
      assign(axis + 1, c);
    }
  }
};

}  // namespace

double integrate_ordered_cells(const OrderedRegion& region, int points_per_axis,
                               std::uint64_t max_evaluations,
                               const std::function<double(std::span<const double>)>& f) {
  const int k = int(region.lo_cell.size());
  if (k < 1) fail(errc::invalid_argument, "ordered region needs at least one variable");
  CellTensor driver{region,
                    gauss_legendre(points_per_axis),
                    f,
                    k,
                    std::vector<int>(k, 0),
                    std::vector<double>(k, 0.0),
                    0,
                    max_evaluations,
                    0.0};
  driver.assign(0, 0);
  return driver.total;
}

}  // namespace gtcorners
