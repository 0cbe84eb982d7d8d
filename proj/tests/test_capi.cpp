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

// Exercises the shared library strictly through its C interface, the way a
// foreign-language binding would.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <gtcorners.h>

namespace {

double square(double x, void*) { return x * x; }

}  // namespace

TEST_CASE("version and error channel") {
  const char* version = gtc_version();
  REQUIRE(version != nullptr);
  CHECK(std::strchr(version, '.') != nullptr);

  double value = -7.0;
  const double bad[] = {1.0, 0.0};
  CHECK(gtc_spline_eval(bad, 2, 0.5, &value) == GTC_ERROR_INVALID_ARGUMENT);
  CHECK(std::strlen(gtc_last_error()) > 0);
  CHECK(value == -7.0);  // outputs untouched on failure
}

TEST_CASE("spline entry points") {
  const double knots[] = {0.0, 1.0, 2.0, 3.0};
  double value = 0.0;
  REQUIRE(gtc_spline_eval(knots, 4, 1.5, &value) == GTC_OK);
  CHECK(value == doctest::Approx(0.75).epsilon(1e-12));

  const double hat[] = {0.0, 1.0, 2.0};
  REQUIRE(gtc_bspline_eval(hat, 3, 1.0, &value) == GTC_OK);
  CHECK(value == doctest::Approx(1.0).epsilon(1e-12));

  REQUIRE(gtc_spline_integrate(knots, 4, -INFINITY, INFINITY, &value) == GTC_OK);
  CHECK(value == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(gtc_spline_integrate(knots, 4, 1.5, INFINITY, &value) == GTC_OK);
  CHECK(value == doctest::Approx(0.5).epsilon(1e-12));

  const double pts[] = {0.0, 0.5, 2.0};
  REQUIRE(gtc_divided_difference(&square, nullptr, pts, 3, &value) == GTC_OK);
  CHECK(value == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(gtc_spline_eval(nullptr, 2, 0.5, &value) == GTC_ERROR_INVALID_ARGUMENT);
  CHECK(gtc_spline_eval(knots, 4, 1.5, nullptr) == GTC_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("geometry entry points") {
  const double outer[] = {0.0, 1.0, 3.0};
  const double inside[] = {0.5, 2.0};
  const double outside[] = {1.2, 1.5};
  int flag = -1;
  REQUIRE(gtc_interlaces(inside, 2, outer, 3, &flag) == GTC_OK);
  CHECK(flag == 1);
  REQUIRE(gtc_interlaces(outside, 2, outer, 3, &flag) == GTC_OK);
  CHECK(flag == 0);

  const double x[] = {0.0, 1.0, 3.0, 7.0};
  CHECK(gtc_interlaces(inside, 2, x, 4, &flag) == GTC_ERROR_DIMENSION);
  double value = 0.0;
  REQUIRE(gtc_vandermonde(x, 4, &value) == GTC_OK);
  CHECK(value == doctest::Approx(1008.0).epsilon(1e-13));

  REQUIRE(gtc_gt_volume(x, 4, &value) == GTC_OK);
  CHECK(value == doctest::Approx(84.0).epsilon(1e-12));
  const double tied[] = {0.0, 1.0, 1.0};
  CHECK(gtc_gt_volume(tied, 3, &value) == GTC_ERROR_DEGENERATE);
}

TEST_CASE("density handle lifecycle") {
  const double x[] = {0.0, 1.0, 3.0, 7.0};
  gtc_density* joint = nullptr;
  REQUIRE(gtc_density_create(x, 4, 2, &joint) == GTC_OK);
  REQUIRE(joint != nullptr);

  const double a[] = {0.5, 2.0};
  double value = -1.0;
  REQUIRE(gtc_density_eval(joint, a, 2, &value) == GTC_OK);
  CHECK(value > 0.0);
  CHECK(gtc_density_eval(joint, a, 1, &value) == GTC_ERROR_DIMENSION);

  double mass = 0.0;
  REQUIRE(gtc_density_normalization(joint, 0, &mass) == GTC_OK);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));

  // Integrating one more corner step out of the 2-row density must reproduce
  // the 1-row density.
  gtc_density* single = nullptr;
  REQUIRE(gtc_density_create(x, 4, 1, &single) == GTC_OK);
  const double b[] = {2.0};
  double composed = 0.0;
  double direct = 0.0;
  REQUIRE(gtc_density_compose_eval(joint, b, 1, &composed) == GTC_OK);
  REQUIRE(gtc_density_eval(single, b, 1, &direct) == GTC_OK);
  CHECK(composed == doctest::Approx(direct).epsilon(1e-8));

  gtc_density_destroy(single);
  gtc_density_destroy(joint);

  CHECK(gtc_density_create(x, 4, 4, &joint) == GTC_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("transition kernel and spherical integral") {
  const double x2[] = {0.0, 2.0};
  const double a1[] = {1.0};
  double value = 0.0;
  REQUIRE(gtc_kernel_density(x2, 2, a1, 1, &value) == GTC_OK);
  CHECK(value == doctest::Approx(0.5).epsilon(1e-13));

  const double x[] = {0.0, 1.0};
  const double z_re[] = {0.0, 1.0};
  double re = 0.0;
  double im = -1.0;
  REQUIRE(gtc_hciz(x, 2, z_re, nullptr, &re, &im) == GTC_OK);
  CHECK(re == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
  CHECK(im == doctest::Approx(0.0).epsilon(1e-12));

  const double z_im[] = {0.0, 5.0};
  const double zeros[] = {0.0, 0.0};
  REQUIRE(gtc_hciz(x, 2, zeros, z_im, &re, &im) == GTC_OK);
  CHECK(std::hypot(re, im) <= 1.0 + 1e-12);

  const double huge[] = {0.0, 1000.0};
  CHECK(gtc_hciz(huge, 2, z_re, nullptr, &re, &im) == GTC_ERROR_RANGE);
}

TEST_CASE("sampler determinism across thread counts") {
  const double x[] = {0.0, 1.0, 3.0, 7.0};
  gtc_sampler* serial = nullptr;
  gtc_sampler* parallel = nullptr;
  REQUIRE(gtc_sampler_create(x, 4, 7u, 1, &serial) == GTC_OK);
  REQUIRE(gtc_sampler_create(x, 4, 7u, 3, &parallel) == GTC_OK);

  const int64_t count = 64;
  std::vector<double> one(static_cast<std::size_t>(count) * 2);
  std::vector<double> two(static_cast<std::size_t>(count) * 2);
  REQUIRE(gtc_sampler_corner_spectra(serial, 2, count, one.data()) == GTC_OK);
  REQUIRE(gtc_sampler_corner_spectra(parallel, 2, count, two.data()) == GTC_OK);
  CHECK(one == two);
  for (int64_t i = 0; i < count; ++i) {
    const double lo = one[static_cast<std::size_t>(2 * i)];
    const double hi = one[static_cast<std::size_t>(2 * i + 1)];
    CHECK(lo <= hi);
    CHECK(lo >= 0.0);
    CHECK(hi <= 7.0);
  }

  std::vector<double> flat(static_cast<std::size_t>(8) * 6);
  REQUIRE(gtc_sampler_patterns(serial, 8, flat.data()) == GTC_OK);
  int ok_rows = 0;
  for (int p = 0; p < 8; ++p) {
    const double* rows = flat.data() + p * 6;
    // Rows of lengths 3, 2, 1 in that order; each interlaces the one above.
    const double* row3 = rows;
    const double* row2 = rows + 3;
    const double* row1 = rows + 5;
    int flag = 0;
    REQUIRE(gtc_interlaces(row3, 3, x, 4, &flag) == GTC_OK);
    ok_rows += flag;
    REQUIRE(gtc_interlaces(row2, 2, row3, 3, &flag) == GTC_OK);
    ok_rows += flag;
    REQUIRE(gtc_interlaces(row1, 1, row2, 2, &flag) == GTC_OK);
    ok_rows += flag;
  }
  CHECK(ok_rows == 24);

  gtc_sampler_destroy(parallel);
  gtc_sampler_destroy(serial);
}

TEST_CASE("Monte Carlo Laplace transform") {
  const double x[] = {0.0, 1.0, 3.0};
  const std::vector<double> z_re(9, 0.0);
  double re = 0.0;
  double im = 1.0;
  double se = 1.0;
  REQUIRE(gtc_laplace_mc(x, 3, z_re.data(), nullptr, 200, 5u, &re, &im, &se) == GTC_OK);
  CHECK(re == 1.0);
  CHECK(im == 0.0);
  CHECK(se == 0.0);
}

TEST_CASE("exact discrete counting") {
  const int64_t x[] = {0, 1, 2};
  char* text = nullptr;
  REQUIRE(gtc_count_schemes(x, 3, &text) == GTC_OK);
  CHECK(std::string(text) == "8");
  gtc_string_free(text);

  const int64_t y[] = {1};
  text = nullptr;
  REQUIRE(gtc_count_between(x, 3, y, 1, &text) == GTC_OK);
  CHECK(std::string(text) == "4");
  gtc_string_free(text);

  text = nullptr;
  REQUIRE(gtc_relative_dimension(x, 3, y, 1, &text) == GTC_OK);
  CHECK(std::string(text) == "1/2");
  gtc_string_free(text);

  text = nullptr;
  CHECK(gtc_count_between(x, 3, x, 3, &text) == GTC_ERROR_INVALID_ARGUMENT);
  CHECK(text == nullptr);
}

TEST_CASE("discrete-to-continuous scaling comparison") {
  const double x[] = {0.0, 1.0, 2.0};
  const double points[] = {1.0};
  double discrete = 0.0;
  double density = 0.0;
  double diff = -1.0;
  REQUIRE(gtc_scaling_limit(x, 3, 1, 20, points, 1, &discrete, &density, &diff) == GTC_OK);
  CHECK(std::isfinite(discrete));
  CHECK(density > 0.0);
  CHECK(diff == doctest::Approx(std::fabs(discrete - density)).epsilon(1e-13));

  // Output arrays are individually optional.
  REQUIRE(gtc_scaling_limit(x, 3, 1, 20, points, 1, nullptr, nullptr, &diff) == GTC_OK);
}

TEST_CASE("self-verification entry point") {
  char* report = nullptr;
  int all_pass = 0;
  REQUIRE(gtc_verify_run("discrete", 3, 0u, 0, 1, &report, &all_pass) == GTC_OK);
  CHECK(all_pass == 1);
  REQUIRE(report != nullptr);
  CHECK(std::string(report).find("results") != std::string::npos);
  gtc_string_free(report);

  CHECK(gtc_verify_run("nonsense", 0, 0u, 0, 1, nullptr, nullptr) ==
        GTC_ERROR_INVALID_ARGUMENT);
}
