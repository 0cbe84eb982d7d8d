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

#include "gtcorners/density.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include <doctest.h>

#include "gtcorners/splines.hpp"
#include "helpers.hpp"

using namespace gtcorners;
using gtcorners::testing::thrown_code;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
using cd = std::complex<double>;
}

TEST_CASE("corner-step normalization constants") {
  CHECK(c_constant(5, 1) == doctest::Approx(1.0));
  CHECK(c_constant(4, 2) == doctest::Approx(3.0));       // C(3,1)
  CHECK(c_constant(5, 4) == doctest::Approx(24.0));      // (N-1)!
  CHECK(c_constant(8, 7) == doctest::Approx(5040.0));
  // c(N,K) = c(N,K-1) * (N-K+1)^(K-1) / (K-1)!
  for (int n = 3; n <= 8; ++n)
    for (int k = 2; k < n; ++k)
      CHECK(c_constant(n, k) ==
            doctest::Approx(c_constant(n, k - 1) * std::pow(n - k + 1, k - 1) /
                            std::tgamma(double(k)))
                .epsilon(1e-12));
  CHECK(std::exp(log_c_constant(6, 3)) == doctest::Approx(c_constant(6, 3)).epsilon(1e-12));
  CHECK(thrown_code([] { c_constant(4, 0); }) == errc::invalid_argument);
  CHECK(thrown_code([] { c_constant(4, 4); }) == errc::invalid_argument);
}

TEST_CASE("one-step transition density") {
  CHECK(kernel_density(std::vector<double>{0, 1}, std::vector<double>{0.3}) ==
        doctest::Approx(1.0));
  CHECK(kernel_density(std::vector<double>{0, 1, 2}, std::vector<double>{0.5, 1.5}) ==
        doctest::Approx(1.0));
  CHECK(kernel_density(std::vector<double>{0, 1, 2}, std::vector<double>{1.2, 1.5}) == 0.0);
  CHECK(thrown_code([] {
          kernel_density(std::vector<double>{0, 0, 1}, std::vector<double>{0.0, 0.5});
        }) == errc::degenerate_spectrum);
}

TEST_CASE("interlacing polytope volume") {
  CHECK(gt_volume(std::vector<double>{0, 1}) == doctest::Approx(1.0));
  CHECK(gt_volume(std::vector<double>{0, 1, 2}) == doctest::Approx(1.0));
  CHECK(gt_volume(std::vector<double>{0, 2.5}) == doctest::Approx(2.5));
  // V(X)/ (1! 2! 3!) for N=4, X=(0,1,3,7): 1008/12 = 84
  CHECK(gt_volume(std::vector<double>{0, 1, 3, 7}) == doctest::Approx(84.0));
  CHECK(thrown_code([] { gt_volume(std::vector<double>{0, 0, 1}); }) ==
        errc::degenerate_spectrum);
  CHECK(thrown_code([] { gt_volume(std::vector<double>{1.0}); }) == errc::invalid_argument);
}

TEST_CASE("spherical integral closed forms") {
  // N=1: plain exponential
  {
    const cd value = hciz(std::vector<double>{2.0}, std::vector<cd>{cd(0.7, 0.0)});
    CHECK(value.real() == doctest::Approx(std::exp(1.4)));
    CHECK(value.imag() == doctest::Approx(0.0));
  }
  // N=2, z=(0,s), x=(x1,x2): (e^{s x2} - e^{s x1}) / (s (x2 - x1))
  {
    const cd value = hciz(std::vector<double>{0, 1}, std::vector<cd>{cd(0, 0), cd(1, 0)});
    CHECK(value.real() == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    CHECK(value.imag() == doctest::Approx(0.0));
  }
  // purely imaginary z gives a Fourier-type value with |value| <= 1
  {
    const cd value =
        hciz(std::vector<double>{0, 1, 2}, std::vector<cd>{cd(0, 0.5), cd(0, 1.0), cd(0, 1.5)});
    CHECK(std::abs(value) <= 1.0 + 1e-12);
  }
  CHECK(thrown_code([] {
          hciz(std::vector<double>{0, 1}, std::vector<cd>{cd(0.3, 0), cd(0.3, 0)});
        }) == errc::degenerate_spectrum);
  CHECK(thrown_code([] {
          hciz(std::vector<double>{0, 1000}, std::vector<cd>{cd(0, 0), cd(1, 0)});
        }) == errc::range_overflow);
  CHECK(thrown_code([] {
          hciz(std::vector<double>{0, 1}, std::vector<cd>{cd(0, 0)});
        }) == errc::dimension_mismatch);
}

TEST_CASE("corner density basics") {
  const CornerDensity flat(std::vector<double>{0, 1}, 1);
  CHECK(flat(std::vector<double>{0.5}) == doctest::Approx(1.0));
  CHECK(flat(std::vector<double>{1.5}) == 0.0);

  const CornerDensity hat(std::vector<double>{0, 1, 2}, 1);
  CHECK(hat(std::vector<double>{1.0}) == doctest::Approx(1.0));
  CHECK(hat(std::vector<double>{0.25}) ==
        doctest::Approx(fundamental_spline(0.25, std::vector<double>{0, 1, 2})));

  // top step agrees with the one-step transition density
  const std::vector<double> x = {0, 1, 3, 7};
  const CornerDensity top(x, 3);
  const std::vector<double> a = {0.5, 2.0, 4.0};
  CHECK(top(a) == doctest::Approx(kernel_density(x, a)).epsilon(1e-12));

  CHECK(thrown_code([] { CornerDensity(std::vector<double>{0, 0, 1}, 1); }) ==
        errc::degenerate_spectrum);
  CHECK(thrown_code([] { CornerDensity(std::vector<double>{0, 1}, 2); }) ==
        errc::invalid_argument);
  CHECK(thrown_code([&] { top(std::vector<double>{1.0, 0.5, 2.0}); }) ==
        errc::invalid_argument);
  CHECK(thrown_code([&] { top(std::vector<double>{1.0, 2.0}); }) == errc::dimension_mismatch);
}

TEST_CASE("density is nonnegative up to the documented floor") {
  const std::vector<double> x = {0, 0.5, 1.3, 2.9, 4.1, 6.0};
  const CornerDensity density(x, 3);
  for (double a1 = -0.2; a1 < 6.3; a1 += 0.43)
    for (double a2 = a1; a2 < 6.3; a2 += 0.39)
      for (double a3 = a2; a3 < 6.3; a3 += 0.41)
        CHECK(density(std::vector<double>{a1, a2, a3}) >= -1e-9);
}

TEST_CASE("region and cell probabilities") {
  const CornerDensity hat(std::vector<double>{0, 1, 2}, 1);
  // half-line mass matches the closed-form tail integral
  for (double t : {0.3, 1.0, 1.7}) {
    CHECK(hat.region_probability(std::vector<double>{-kInf}, std::vector<double>{t}) ==
          doctest::Approx(spline_tail_integral(-kInf, t, std::vector<double>{0, 1, 2}))
              .epsilon(1e-12));
  }
  const int cells0[] = {0};
  CHECK(hat.cell_probability(cells0) == doctest::Approx(0.5));
  CHECK(hat.normalization() == doctest::Approx(1.0).epsilon(1e-10));

  const CornerDensity mid(std::vector<double>{0, 1, 3, 7}, 2);
  CHECK(mid.normalization() == doctest::Approx(1.0).epsilon(1e-8));
  // full box equals total mass
  CHECK(mid.region_probability(std::vector<double>{-kInf, -kInf},
                               std::vector<double>{kInf, kInf}) ==
        doctest::Approx(mid.normalization()).epsilon(1e-12));
}

TEST_CASE("corner-step composition") {
  const CornerDensity density(std::vector<double>{0, 1, 2}, 2);
  // composing down to K=1 must reproduce the unit-mass spline
  CHECK(density.compose_with_corner_kernel(std::vector<double>{1.0}) ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK(density.compose_with_corner_kernel(std::vector<double>{0.5}) ==
        doctest::Approx(0.5).epsilon(1e-8));
  CHECK(density.compose_with_corner_kernel(std::vector<double>{5.0}) == 0.0);
  CHECK(thrown_code([&] {
          const CornerDensity k1(std::vector<double>{0, 1, 2}, 1);
          k1.compose_with_corner_kernel(std::vector<double>{});
        }) == errc::invalid_argument);
}

TEST_CASE("quadrature budget propagates") {
  const CornerDensity density(std::vector<double>{0, 1, 3, 7, 12}, 4);
  QuadratureSpec tiny;
  tiny.max_evaluations = 2;
  CHECK(thrown_code([&] { density.normalization(tiny); }) == errc::resource_limit);
}
