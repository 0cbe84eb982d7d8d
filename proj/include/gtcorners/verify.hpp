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

#ifndef GTCORNERS_VERIFY_HPP
#define GTCORNERS_VERIFY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gtcorners {

struct CheckResult {
  std::string name;
  double statistic;
  double threshold;
  bool pass;
};

struct VerifyOptions {
  int max_n = 6;               // continuous sweep cap; hard budget 8
  int discrete_max_n = 4;      // discrete sweep cap; hard budget 5
  std::uint64_t seed = 20260814;
  std::int64_t samples = 100000;
  std::int64_t volume_points = 1000000;
  int knot_vectors = 200;
  int grid_points = 1000;
  int threads = 0;             // 0: hardware concurrency
};

/// Named end-to-end verification suites:
/// splines, kernel, theorem, volume, hciz, recurrence, discrete, all.
/// Unknown names are argument errors; budgets above the hard caps are
/// resource errors.
std::vector<CheckResult> verify_suite(std::string_view name, const VerifyOptions& options = {});

/// JSON report: {"results": [{test, statistic, threshold, pass}...],
/// "all_pass": bool}.
std::string report_json(std::span<const CheckResult> results);

/// Deterministic strictly increasing spectra used in fixed-X checks
/// (prefixes of 0, 1, 3, 7, 12, 18, 25, 33).
std::vector<double> pinned_spectrum(int n);

// Fine-grained check groups; the acceptance binary drives these directly
// with its own pinned parameters.
std::vector<CheckResult> check_spline_identities(int knot_vectors, int grid_points,
                                                 std::uint64_t seed);
std::vector<CheckResult> check_kernel_top_step(int max_n, int points, std::uint64_t seed);
std::vector<CheckResult> check_corner_k1(std::int64_t samples, std::uint64_t seed, int threads);
std::vector<CheckResult> check_corner_multivariate(int max_n, std::int64_t samples,
                                                   std::uint64_t seed, int threads);
std::vector<CheckResult> check_normalization(int max_n);
std::vector<CheckResult> check_composition(int max_n, std::uint64_t seed);
std::vector<CheckResult> check_volume(std::int64_t points, int max_n, std::uint64_t seed);
std::vector<CheckResult> check_hciz(std::int64_t samples, int max_n, std::uint64_t seed);
std::vector<CheckResult> check_tail_determinants(int instances, int max_n, std::uint64_t seed);
std::vector<CheckResult> check_discrete_counting(int max_n);
std::vector<CheckResult> check_discrete_scaling();

}  // namespace gtcorners

#endif  // GTCORNERS_VERIFY_HPP
