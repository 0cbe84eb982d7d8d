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

// Acceptance gate: ten end-to-end criteria, each printing one PASS/FAIL line.
// Seeds and tolerances are pinned inside the check implementations; the
// binary exits nonzero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "gtcorners/verify.hpp"

namespace {

constexpr std::uint64_t kSeed = 20260814;

int worker_threads() {
  if (const char* env = std::getenv("GTCORNERS_THREADS"); env != nullptr && *env != '\0') {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return int(hw == 0 ? 1 : (hw > 8 ? 8 : hw));
}

struct Criterion {
  std::string label;
  std::function<std::vector<gtcorners::CheckResult>()> run;
};

}  // namespace

int main() {
  const int threads = worker_threads();
  using gtcorners::CheckResult;

  const std::vector<Criterion> criteria = {
      {"spline identities: unit mass two ways, dual evaluation routes, support",
       [] { return gtcorners::check_spline_identities(200, 1000, kSeed); }},
      {"top-corner joint density matches the one-step transition kernel",
       [] { return gtcorners::check_kernel_top_step(8, 1000, kSeed); }},
      {"single-eigenvalue corner density equals the knot spline; sampled KS test",
       [&] { return gtcorners::check_corner_k1(100000, kSeed, threads); }},
      {"multi-eigenvalue corner density vs sampling: grid CDF and chi-square",
       [&] { return gtcorners::check_corner_multivariate(5, 100000, kSeed, threads); }},
      {"corner densities integrate to one for every matrix and corner size",
       [] { return gtcorners::check_normalization(6); }},
      {"one corner step maps the K-row density onto the (K-1)-row density",
       [] { return gtcorners::check_composition(5, kSeed); }},
      {"interlacing-polytope volume vs Monte Carlo hit rate and hand values",
       [] { return gtcorners::check_volume(1000000, 4, kSeed); }},
      {"spherical integral: Monte Carlo, symmetries, corner-step identity",
       [] { return gtcorners::check_hciz(100000, 4, kSeed); }},
      {"windowed tail-integral determinants factor into spline determinants",
       [] { return gtcorners::check_tail_determinants(100, 8, kSeed); }},
      {"exact integer counts vs enumeration; rescaled counts approach the density",
       [] {
         std::vector<CheckResult> results = gtcorners::check_discrete_counting(4);
         for (CheckResult& r : gtcorners::check_discrete_scaling()) results.push_back(r);
         return results;
       }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    bool pass = true;
    std::string error;
    try {
      results = criteria[i].run();
      for (const CheckResult& r : results) pass = pass && r.pass;
      pass = pass && !results.empty();
    } catch (const std::exception& e) {
      pass = false;
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s  %s  (%.1fs)\n", i + 1, pass ? "PASS" : "FAIL",
                criteria[i].label.c_str(), seconds);
    if (!pass) {
      ++failures;
      if (!error.empty()) std::printf("    error: %s\n", error.c_str());
      for (const CheckResult& r : results)
        if (!r.pass)
          std::printf("    %s: statistic %.6g vs threshold %.6g\n", r.name.c_str(), r.statistic,
                      r.threshold);
    }
    std::fflush(stdout);
  }

  if (failures != 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
