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

#ifndef GTCORNERS_DISCRETE_HPP
#define GTCORNERS_DISCRETE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gtcorners {

/// Weakly increasing integer tuple.
using Signature = std::vector<long long>;

/// Exact nonnegative count (arbitrary precision).
using BigCount = mpz_class;

struct DiscreteOptions {
  /// Cap on the dense DP table size (number of big-integer slots per row).
  std::uint64_t max_table_cells = std::uint64_t(1) << 24;
};

/// Number of integer triangular arrays with top row X and successively
/// interlacing rows, by DP over row lengths with prefix-sum transitions.
/// Equals 1 for constant X and for N = 1.
BigCount count_schemes(std::span<const long long> x, const DiscreteOptions& options = {});

/// Number of interlacing integer chains from top row X (length N) down to a
/// prescribed row Y (length K < N); 0 when no chain exists.
BigCount count_between(std::span<const long long> x, std::span<const long long> y,
                       const DiscreteOptions& options = {});

/// Fraction of arrays with top row X whose row K equals Y, as an exact
/// rational in [0, 1]: count_between(X,Y) * count_schemes(Y) / count_schemes(X).
mpq_class relative_dimension(std::span<const long long> x, std::span<const long long> y,
                             const DiscreteOptions& options = {});

/// Full row-K distribution: every Y with positive mass, paired with its exact
/// relative dimension.  The masses sum to exactly 1.
std::vector<std::pair<Signature, mpq_class>> relative_dimension_table(
    std::span<const long long> x, int k, const DiscreteOptions& options = {});

struct ScalingRow {
  std::vector<double> point;  // continuous evaluation point a
  double discrete_value;      // L^K * mass of round(L*a) under the row-K law of round(L*x)
  double density_value;       // continuous corner density at a
  double abs_difference;
};

/// Compares the rescaled discrete law against the continuous density at the
/// given points.  Rounding is half-up; if round(L*x) stops being strictly
/// increasing the call fails (degenerate), suggesting a larger L.
std::vector<ScalingRow> scaling_limit_compare(std::span<const double> x, int k, long long l,
                                              const std::vector<std::vector<double>>& points,
                                              const DiscreteOptions& options = {});

}  // namespace gtcorners

#endif  // GTCORNERS_DISCRETE_HPP
