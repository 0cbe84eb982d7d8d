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

#include "gtcorners/verify.hpp"

#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "helpers.hpp"

using namespace gtcorners;
using gtcorners::testing::thrown_code;

namespace {

VerifyOptions quick_options() {
  VerifyOptions options;
  options.max_n = 4;
  options.discrete_max_n = 3;
  options.samples = 20000;
  options.volume_points = 40000;
  options.knot_vectors = 40;
  options.grid_points = 200;
  options.threads = 2;
  return options;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

}  // namespace

TEST_CASE("named suites pass at reduced budgets") {
  const VerifyOptions options = quick_options();
  for (const char* name : {"splines", "kernel", "volume", "recurrence", "discrete"}) {
    CAPTURE(name);
    CHECK(all_pass(verify_suite(name, options)));
  }
}

TEST_CASE("statistical suites pass at reduced budgets") {
  const VerifyOptions options = quick_options();
  for (const char* name : {"theorem", "hciz"}) {
    CAPTURE(name);
    const std::vector<CheckResult> results = verify_suite(name, options);
    for (const CheckResult& r : results) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("suite validation") {
  CHECK(thrown_code([] { verify_suite("nonsense", {}); }) == errc::invalid_argument);
  VerifyOptions big;
  big.max_n = 9;
  CHECK(thrown_code([&] { verify_suite("splines", big); }) == errc::resource_limit);
  VerifyOptions deep;
  deep.discrete_max_n = 6;
  CHECK(thrown_code([&] { verify_suite("discrete", deep); }) == errc::resource_limit);
}

TEST_CASE("report serialization") {
  const std::vector<CheckResult> results = {{"alpha", 0.5, 1.0, true}, {"beta", 2.0, 1.0, false}};
  const nlohmann::json parsed = nlohmann::json::parse(report_json(results));
  REQUIRE(parsed.contains("results"));
  REQUIRE(parsed["results"].size() == 2);
  CHECK(parsed["results"][0]["test"] == "alpha");
  CHECK(parsed["results"][0]["pass"] == true);
  CHECK(parsed["results"][1]["statistic"] == 2.0);
  CHECK(parsed["all_pass"] == false);
}

TEST_CASE("pinned spectra are strictly increasing prefixes") {
  const std::vector<double> x8 = pinned_spectrum(8);
  REQUIRE(x8.size() == 8);
  for (int n = 1; n < 8; ++n) {
    const std::vector<double> xn = pinned_spectrum(n);
    for (int i = 0; i < n; ++i) CHECK(xn[i] == x8[i]);
  }
  CHECK(thrown_code([] { pinned_spectrum(9); }) == errc::invalid_argument);
}
