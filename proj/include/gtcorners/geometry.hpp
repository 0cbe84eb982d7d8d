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

#ifndef GTCORNERS_GEOMETRY_HPP
#define GTCORNERS_GEOMETRY_HPP

#include <span>
#include <vector>

namespace gtcorners {

/// Triangular array of reals.  pattern[0] is the longest row (length N-1),
/// followed by rows of length N-2, ..., 1.
using Pattern = std::vector<std::vector<double>>;

bool is_weakly_increasing(std::span<const double> v);
bool is_strictly_increasing(std::span<const double> v);

/// Smallest consecutive gap of a sorted vector; +infinity when size < 2.
double min_gap(std::span<const double> v);

/// Validates a spectrum (weakly increasing; strictly if `strict`).
/// `what` names the argument in error messages.
void require_spectrum(std::span<const double> v, bool strict, const char* what);

/// Interlacing test: x_1 <= y_1 <= x_2 <= ... <= y_{N-1} <= x_N (weak
/// inequalities).  `outer` must be exactly one longer than `inner`.
bool interlaces(std::span<const double> inner, std::span<const double> outer);

/// Product of pairwise differences prod_{j>i} (x_j - x_i).
/// 1 for fewer than two points; 0 when entries coincide.
double vandermonde(std::span<const double> x);

/// log |vandermonde| for sorted strictly increasing x (all factors positive).
double log_vandermonde(std::span<const double> x);

/// Membership of a triangular pattern in the polytope over top row `x`:
/// every adjacent pair of rows (and `x` with the first row) interlaces.
bool pattern_in_polytope(const Pattern& pattern, std::span<const double> x);

}  // namespace gtcorners

#endif  // GTCORNERS_GEOMETRY_HPP
