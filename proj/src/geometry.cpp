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

#include "gtcorners/geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gtcorners/errors.hpp"

namespace gtcorners {

bool is_weakly_increasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] <= v[i])) return false;
  return true;
}

bool is_strictly_increasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] < v[i])) return false;
  return true;
}

double min_gap(std::span<const double> v) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < v.size(); ++i) gap = std::min(gap, v[i] - v[i - 1]);
  return gap;
}

void require_spectrum(std::span<const double> v, bool strict, const char* what) {
  for (double value : v)
    if (!std::isfinite(value))
      fail(errc::invalid_argument, std::string(what) + " contains a non-finite entry");
  if (!is_weakly_increasing(v))
    fail(errc::invalid_argument, std::string(what) + " must be sorted in increasing order");
  if (strict && !is_strictly_increasing(v))
    fail(errc::degenerate_spectrum,
         std::string(what) + " has repeated entries where distinct values are required");
}

bool interlaces(std::span<const double> inner, std::span<const double> outer) {
  if (outer.size() != inner.size() + 1)
    fail(errc::dimension_mismatch, "interlacing requires lengths differing by exactly 1");
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (!(outer[i] <= inner[i] && inner[i] <= outer[i + 1])) return false;
  return true;
}

double vandermonde(std::span<const double> x) {
  double product = 1.0;
  for (std::size_t j = 1; j < x.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) product *= x[j] - x[i];
  return product;
}

double log_vandermonde(std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t j = 1; j < x.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) sum += std::log(x[j] - x[i]);
  return sum;
}

bool pattern_in_polytope(const Pattern& pattern, std::span<const double> x) {
  if (x.empty()) fail(errc::invalid_argument, "top row must be nonempty");
  const std::size_t n = x.size();
  if (pattern.size() + 1 != n)
    fail(errc::dimension_mismatch, "pattern must have exactly one row per size N-1..1");
  std::span<const double> upper = x;
  for (std::size_t r = 0; r < pattern.size(); ++r) {
    std::span<const double> row(pattern[r]);
    if (row.size() + r + 2 != n + 1)
      fail(errc::dimension_mismatch, "pattern row " + std::to_string(r) + " has wrong length");
    if (!interlaces(row, upper)) return false;
    upper = row;
  }
  return true;
}

}  // namespace gtcorners
