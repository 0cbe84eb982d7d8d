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
#include <vector>

#include <doctest.h>

#include "gtcorners/matrixmodel.hpp"
#include "helpers.hpp"

using namespace gtcorners;
using gtcorners::testing::thrown_code;

TEST_CASE("sample sets validate rows") {
  CHECK_FALSE(thrown_code([] { SampleSet(2, {0.1, 0.2, 0.3, 0.3}); }));
  CHECK(thrown_code([] { SampleSet(2, {0.2, 0.1}); }) == errc::invalid_argument);
  CHECK(thrown_code([] { SampleSet(2, {0.1, 0.2, 0.3}); }) == errc::dimension_mismatch);
  const SampleSet set(2, {0.1, 0.2, 0.3, 0.4});
  CHECK(set.count() == 2);
  CHECK(set.row(1)[0] == 0.3);
}

TEST_CASE("Kolmogorov-Smirnov statistic") {
  // identical empirical and model step functions: distance 0
  {
    std::vector<double> samples(16);
    for (int i = 0; i < 16; ++i) samples[i] = double(i);
    const auto empirical = [&samples](double t) {
      return double(std::upper_bound(samples.begin(), samples.end(), t) - samples.begin()) / 16.0;
    };
    CHECK(ks_statistic_1d(samples, empirical) == doctest::Approx(0.0));
  }
  // constant samples against a continuous model: mismatch at least 1/2
  {
    const std::vector<double> samples(32, 0.5);
    CHECK(ks_statistic_1d(samples, [](double t) { return std::clamp(t, 0.0, 1.0); }) >= 0.5);
  }
  // uniform samples against the uniform model stay below the 1% critical value
  {
    RandomStream rng(99);
    std::vector<double> samples(100000);
    for (double& v : samples) v = rng.uniform();
    const double d =
        ks_statistic_1d(std::move(samples), [](double t) { return std::clamp(t, 0.0, 1.0); });
    CHECK(d < 1.63 / std::sqrt(100000.0));
  }
  // invariance under a simultaneous strictly increasing reparametrization
  {
    RandomStream rng(7);
    std::vector<double> samples(500), mapped(500);
    for (int i = 0; i < 500; ++i) {
      samples[i] = rng.uniform();
      mapped[i] = 2.0 * samples[i] + 1.0;
    }
    const double base =
        ks_statistic_1d(samples, [](double t) { return std::clamp(t, 0.0, 1.0); });
    const double moved = ks_statistic_1d(
        mapped, [](double t) { return std::clamp((t - 1.0) / 2.0, 0.0, 1.0); });
    CHECK(moved == doctest::Approx(base).epsilon(1e-12));
  }
  CHECK(thrown_code([] {
          ks_statistic_1d(std::vector<double>(5, 0.1), [](double) { return 0.5; });
        }) == errc::invalid_argument);
}

TEST_CASE("grid CDF discrepancy") {
  const std::vector<double> x = {0, 1, 3, 7};
  const CornerDensity density(x, 2);
  const std::vector<double> rows = sample_corner_spectra(x, 2, 2000, 11, 2);
  const SampleSet set(2, rows, x, 11);
  // the all-x_N corner of the box carries full mass on both sides
  CHECK(grid_cdf_discrepancy(set, density, {{7.0, 7.0}}) == doctest::Approx(0.0).epsilon(1e-8));
  // the all-x_1 corner bounds a measure-zero region: both sides are 0
  CHECK(grid_cdf_discrepancy(set, density, {{0.0, 0.0}}) == doctest::Approx(0.0).epsilon(1e-8));
  // grid points outside the box are rejected
  CHECK(thrown_code([&] { grid_cdf_discrepancy(set, density, {{-1.0, 2.0}}); }) ==
        errc::invalid_argument);
  CHECK(thrown_code([&] { grid_cdf_discrepancy(set, density, {{1.0}}); }) ==
        errc::dimension_mismatch);
}

TEST_CASE("grid CDF discrepancy shrinks with sample size") {
  const std::vector<double> x = {0, 1, 3, 7};
  const CornerDensity density(x, 1);
  const std::vector<std::vector<double>> grid = {{0.5}, {1.5}, {2.5}, {4.0}, {6.0}};
  std::vector<double> at_n;
  for (const std::size_t n : {std::size_t(1000), std::size_t(10000), std::size_t(100000)}) {
    const std::vector<double> rows = sample_corner_spectra(x, 1, std::int64_t(n), 17, 2);
    at_n.push_back(grid_cdf_discrepancy(SampleSet(1, rows, x, 17), density, grid));
  }
  // a trend (pinned seed), not a per-run law: the 100x larger sample wins
  CHECK(at_n.back() < at_n.front());
}

TEST_CASE("cell partitions") {
  const std::vector<std::vector<int>> cells = knot_cell_partition(2, 2);
  REQUIRE(cells.size() == 3);
  CHECK(cells[0] == std::vector<int>{0, 0});
  CHECK(cells[1] == std::vector<int>{0, 1});
  CHECK(cells[2] == std::vector<int>{1, 1});
  CHECK(knot_cell_partition(3, 1).size() == 3);
}

TEST_CASE("chi-square histogram") {
  const std::vector<double> x = {0, 1, 2};
  const CornerDensity density(x, 1);
  const std::vector<std::vector<int>> bins = knot_cell_partition(2, 1);
  // cell masses are (1/2, 1/2); exact proportions give statistic 0
  {
    std::vector<double> rows;
    for (int i = 0; i < 5; ++i) rows.push_back(0.5);
    for (int i = 0; i < 5; ++i) rows.push_back(1.5);
    const Chi2Result r = histogram_chi2(SampleSet(1, rows), density, bins);
    CHECK(r.statistic == doctest::Approx(0.0));
    CHECK(r.dof == 1);
  }
  // gross mismatch: all ten samples in the first cell gives (5)^2/5 + (5)^2/5
  {
    const Chi2Result r = histogram_chi2(SampleSet(1, std::vector<double>(10, 0.5)), density, bins);
    CHECK(r.statistic == doctest::Approx(10.0));
  }
  // merging low-expectation bins can leave too few groups
  CHECK(thrown_code([&] {
          histogram_chi2(SampleSet(1, std::vector<double>(6, 0.5)), density, bins);
        }) == errc::invalid_argument);
}

TEST_CASE("chi-square CDF reference values") {
  // frozen from an independent arbitrary-precision evaluation
  CHECK(chi_squared_cdf(1.0, 1) == doctest::Approx(0.6826894921370859).epsilon(1e-12));
  CHECK(chi_squared_cdf(2.0, 2) == doctest::Approx(0.63212055882855768).epsilon(1e-12));
  CHECK(chi_squared_cdf(10.0, 10) == doctest::Approx(0.55950671493478759).epsilon(1e-12));
  CHECK(chi_squared_cdf(0.5, 3) == doctest::Approx(0.081108588345324141).epsilon(1e-12));
  CHECK(chi_squared_cdf(3.5, 7) == doctest::Approx(0.16477451738965786).epsilon(1e-12));
  // the acceptance band edges for 10 degrees of freedom
  CHECK(chi_squared_cdf(25.188, 10) == doctest::Approx(0.99499968074768215).epsilon(1e-10));
  CHECK(chi_squared_cdf(2.1558, 10) == doctest::Approx(0.0049994594100440638).epsilon(1e-8));
  CHECK(chi_squared_cdf(0.0, 4) == 0.0);
}
