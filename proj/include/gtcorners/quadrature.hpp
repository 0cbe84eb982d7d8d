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

#ifndef GTCORNERS_QUADRATURE_HPP
#define GTCORNERS_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace gtcorners {

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
/// <= 2 * points - 1.  Rules are computed once and cached.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int points);

/// Gauss-Legendre approximation of the integral of f over [lo, hi].
double integrate_interval(const std::function<double(double)>& f, double lo, double hi,
                          int points);

/// Region of ordered tuples a_1 <= ... <= a_K cut into cells by `cuts`
/// (sorted, strictly increasing); variable j is further confined to cells
/// lo_cell[j] .. hi_cell[j] (an empty range makes the region empty).
struct OrderedRegion {
  std::vector<double> cuts;
  std::vector<int> lo_cell;
  std::vector<int> hi_cell;
};

/// Builds an OrderedRegion from base cut points and per-variable bounds.
/// Bounds are clamped to [base.front(), base.back()] (infinite bounds allowed)
/// and inserted as additional cuts so cell ranges align exactly.
OrderedRegion make_region(std::span<const double> base_cuts, std::span<const double> lower,
                          std::span<const double> upper);

/// Integrates f over the region by enumerating weakly increasing cell
/// assignments and applying a tensor Gauss-Legendre rule per assignment;
/// blocks of variables sharing a cell carry weight 1/m!, which is exact when
/// f is symmetric under permutations of its arguments (the only case with
/// shareable cells in this library).  `points_per_axis` nodes per variable;
/// exceeding `max_evaluations` total integrand calls is a resource error.
double integrate_ordered_cells(const OrderedRegion& region, int points_per_axis,
                               std::uint64_t max_evaluations,
                               const std::function<double(std::span<const double>)>& f);

}  // namespace gtcorners

#endif  // GTCORNERS_QUADRATURE_HPP
