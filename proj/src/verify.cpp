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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <thread>

#include <json.hpp>

#include "gtcorners/density.hpp"
#include "gtcorners/discrete.hpp"
#include "gtcorners/errors.hpp"
#include "gtcorners/geometry.hpp"
#include "gtcorners/matrixmodel.hpp"
#include "gtcorners/quadrature.hpp"
#include "gtcorners/splines.hpp"
#include "gtcorners/stats.hpp"

namespace gtcorners {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int effective_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(std::min(8u, hw));
}

// random strictly increasing knots with gaps in [0.1, 1.1]: random but far
// from the conditioning floor, so 1e-10 identities are meaningful
std::vector<double> random_knots(int n, RandomStream& rng) {
  std::vector<double> y(n);
  y[0] = -1.0 + 2.0 * rng.uniform();
  for (int i = 1; i < n; ++i) y[i] = y[i - 1] + 0.1 + rng.uniform();
  return y;
}

double rel_error(double lhs, double rhs, double scale_floor) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), scale_floor});
  return std::abs(lhs - rhs) / scale;
}

// Quadruple-precision divided difference of (x - t)_+^m over the points y.
// The triangular recursion on truncated powers cancels catastrophically in
// double (9+ digits lost near n = 12), so check-side oracles built on it run
// in extended precision; production code never uses this path.
__float128 dd_truncated_power(double t, std::span<const double> y, int m) {
  const int n = int(y.size());
  std::vector<__float128> table(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    __float128 power = 0;
    if (y[std::size_t(i)] > t) {
      power = 1;
      for (int e = 0; e < m; ++e) power *= __float128(y[std::size_t(i)]) - t;
    }
    table[std::size_t(i)] = power;
  }
  for (int level = 1; level < n; ++level)
    for (int i = 0; i + level < n; ++i)
      table[std::size_t(i)] = (table[std::size_t(i) + 1] - table[std::size_t(i)]) /
                              (__float128(y[std::size_t(i + level)]) - y[std::size_t(i)]);
  return table[0];
}

// Literal divided-difference route for the unit-integral spline.
double spline_via_divided_difference(double a, std::span<const double> y) {
  const int n = int(y.size());
  return double(double(n - 1) * dd_truncated_power(a, y, n - 2));
}

// Spline mass above t over the window y (1 and 0 at the infinite ends).
__float128 mass_above_exact(double t, std::span<const double> y) {
  if (t == -kInf) return 1;
  if (t == kInf) return 0;
  return dd_truncated_power(t, y, int(y.size()) - 1);
}

__float128 quad_abs(__float128 v) { return v < 0 ? -v : v; }

// determinant by Gaussian elimination with partial pivoting
__float128 quad_determinant(std::vector<std::vector<__float128>> m) {
  const std::size_t k = m.size();
  __float128 det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < k; ++r)
      if (quad_abs(m[r][c]) > quad_abs(m[pivot][c])) pivot = r;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    if (m[c][c] == 0) return 0;
    det *= m[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      const __float128 factor = m[r][c] / m[c][c];
      for (std::size_t cc = c; cc < k; ++cc) m[r][cc] -= factor * m[c][cc];
    }
  }
  return det;
}

CheckResult make_result(std::string name, double statistic, double threshold) {
  return {std::move(name), statistic, threshold, statistic <= threshold};
}

}  // namespace

std::vector<double> pinned_spectrum(int n) {
  static const double family[] = {0, 1, 3, 7, 12, 18, 25, 33};
  if (n < 1 || n > 8) fail(errc::invalid_argument, "pinned spectra cover N in [1, 8]");
  return std::vector<double>(family, family + n);
}

std::vector<CheckResult> check_spline_identities(int knot_vectors, int grid_points,
                                                 std::uint64_t seed) {
  RandomStream rng(seed);
  double worst_mass = 0.0;       // closed-form full mass vs 1
  double worst_quad = 0.0;       // closed form vs per-cell Gauss-Legendre
  double worst_dd = 0.0;         // value vs (n-1) * divided difference route
  double worst_piecewise = 0.0;  // value vs exact piecewise form
  double worst_smooth = 0.0;     // (n-3)rd derivative jump across knots
  int violations = 0;            // support/nonnegativity breaches
  for (int t = 0; t < knot_vectors; ++t) {
    const int n = 2 + int(rng.next_u64() % 11);
    const std::vector<double> y = random_knots(n, rng);
    const double range = y.back() - y.front();
    const double floor_scale = 1.0 / range;

    worst_mass = std::max(worst_mass, std::abs(spline_tail_integral(-kInf, kInf, y) - 1.0));
    double quad_mass = 0.0;
    const int points = n / 2 + 1;
    for (int c = 0; c + 1 < n; ++c)
      quad_mass += integrate_interval([&](double a) { return fundamental_spline(a, y); }, y[c],
                                      y[c + 1], points);
    worst_quad = std::max(worst_quad, std::abs(quad_mass - 1.0));

    for (int p = 0; p < 5; ++p) {
      const double a = y.front() - 0.1 * range + 1.2 * range * rng.uniform();
      const double direct = fundamental_spline(a, y);
      const double via_dd = spline_via_divided_difference(a, y);
      worst_dd = std::max(worst_dd, rel_error(direct, via_dd, floor_scale));
    }

    const PiecewisePolynomial pw = to_piecewise(y);
    for (int g = 0; g < grid_points; ++g) {
      const double a = y.front() - 0.05 * range + 1.1 * range * (double(g) + 0.5) / grid_points;
      const double v = fundamental_spline(a, y);
      if (v < 0.0) ++violations;
      if ((a < y.front() || a >= y.back()) && v != 0.0) ++violations;
      worst_piecewise = std::max(worst_piecewise, rel_error(v, pw.evaluate(a), floor_scale));
    }

    if (n >= 3) {
      for (int c = 1; c + 1 < n; ++c) {
        const double left = pw.derivative(y[c], n - 3, /*from_left=*/true);
        const double right = pw.derivative(y[c], n - 3, /*from_left=*/false);
        const double scale = std::max({std::abs(left), std::abs(right), floor_scale});
        worst_smooth = std::max(worst_smooth, std::abs(left - right) / scale);
      }
    }
  }
  return {make_result("spline-unit-mass-closed-form", worst_mass, 1e-10),
          make_result("spline-unit-mass-quadrature", worst_quad, 1e-10),
          make_result("spline-divided-difference-route", worst_dd, 1e-10),
          make_result("spline-support-nonnegativity", double(violations), 0.5),
          make_result("spline-piecewise-agreement", worst_piecewise, 1e-12),
          make_result("spline-derivative-continuity", worst_smooth, 1e-6)};
}

std::vector<CheckResult> check_kernel_top_step(int max_n, int points, std::uint64_t seed) {
  RandomStream rng(seed);
  double worst = 0.0;
  for (int n = 2; n <= max_n; ++n) {
    const std::vector<double> x = pinned_spectrum(n);
    const CornerDensity density(x, n - 1);
    std::vector<double> a(n - 1);
    for (int p = 0; p < points; ++p) {
      for (int i = 0; i + 1 < n; ++i)
        a[i] = x[i] + (0.01 + 0.98 * rng.uniform()) * (x[i + 1] - x[i]);
      const double via_kernel = kernel_density(x, a);
      worst = std::max(worst, rel_error(density(a), via_kernel, std::abs(via_kernel)));
    }
  }
  return {make_result("density-top-step-agreement", worst, 1e-10)};
}

std::vector<CheckResult> check_corner_k1(std::int64_t samples, std::uint64_t seed, int threads) {
  double worst = 0.0;
  RandomStream rng(seed);
  for (int n = 2; n <= 8; ++n) {
    const std::vector<double> x = pinned_spectrum(n);
    const CornerDensity density(x, 1);
    const double range = x.back() - x.front();
    for (int p = 0; p < 200; ++p) {
      const double a = x.front() - 0.05 * range + 1.1 * range * rng.uniform();
      const double point[] = {a};
      worst = std::max(worst, rel_error(density(point), fundamental_spline(a, x), 1.0 / range));
    }
  }

  const std::vector<double> x = pinned_spectrum(4);  // (0, 1, 3, 7)
  std::vector<double> draws =
      sample_corner_spectra(x, 1, samples, seed, effective_threads(threads));
  const double ks = ks_statistic_1d(
      std::move(draws), [&x](double t) { return spline_tail_integral(-kInf, t, x); });
  return {make_result("density-k1-matches-spline", worst, 1e-12),
          make_result("corner-sample-ks", ks, 1.63 / std::sqrt(double(samples)))};
}

std::vector<CheckResult> check_corner_multivariate(int max_n, std::int64_t samples,
                                                   std::uint64_t seed, int threads) {
  struct Config {
    int n, k;
  };
  const Config configs[] = {{4, 2}, {5, 2}, {5, 3}};
  std::vector<CheckResult> results;
  for (const Config& cfg : configs) {
    if (cfg.n > max_n) continue;
    const std::vector<double> x = pinned_spectrum(cfg.n);
    const CornerDensity density(x, cfg.k);
    const std::vector<double> rows =
        sample_corner_spectra(x, cfg.k, samples, seed + cfg.n * 10 + cfg.k, effective_threads(threads));
    const SampleSet set(cfg.k, rows, x, seed);

    std::vector<double> levels(5);
    for (int m = 0; m < 5; ++m)
      levels[m] = x.front() + (m + 1) * (x.back() - x.front()) / 6.0;
    std::vector<std::vector<double>> grid;
    std::vector<int> idx(cfg.k, 0);
    while (true) {
      std::vector<double> t(cfg.k);
      for (int j = 0; j < cfg.k; ++j) t[j] = levels[idx[j]];
      grid.push_back(std::move(t));
      int j = cfg.k - 1;
      while (j >= 0 && idx[j] == 4) idx[j--] = 0;
      if (j < 0) break;
      ++idx[j];
    }
    const double discrepancy = grid_cdf_discrepancy(set, density, grid);
    const std::string tag = "-" + std::to_string(cfg.n) + "-" + std::to_string(cfg.k);
    results.push_back(make_result("corner-sample-grid-cdf" + tag, discrepancy,
                                  5.0 / std::sqrt(double(samples))));

    const Chi2Result chi2 =
        histogram_chi2(set, density, knot_cell_partition(cfg.n - 1, cfg.k));
    const double p = chi_squared_cdf(chi2.statistic, chi2.dof);
    results.push_back(make_result("corner-sample-chi2" + tag, std::abs(p - 0.5), 0.495));
  }
  return results;
}

std::vector<CheckResult> check_normalization(int max_n) {
  double worst = 0.0;
  for (int n = 2; n <= max_n; ++n) {
    const std::vector<double> x = pinned_spectrum(n);
    for (int k = 1; k < n; ++k) {
      const CornerDensity density(x, k);
      worst = std::max(worst, std::abs(density.normalization() - 1.0));
    }
  }
  return {make_result("density-total-mass", worst, 1e-8)};
}

std::vector<CheckResult> check_composition(int max_n, std::uint64_t seed) {
  RandomStream rng(seed);
  double worst = 0.0, worst_outside = 0.0;
  for (int n = 3; n <= std::min(max_n, 5); ++n) {
    const std::vector<double> x = pinned_spectrum(n);
    const double range = x.back() - x.front();
    for (int k = 2; k < n; ++k) {
      const CornerDensity upper(x, k);
      const CornerDensity lower(x, k - 1);
      std::vector<double> b(k - 1);
      for (int p = 0; p < 10; ++p) {
        for (double& v : b) v = x.front() + range * rng.uniform();
        std::sort(b.begin(), b.end());
        const double composed = upper.compose_with_corner_kernel(b);
        const double direct = lower(b);
        worst = std::max(worst, std::abs(composed - direct) / std::max(1.0, std::abs(direct)));
      }
      for (double& v : b) v = x.back() + 1.0 + double(&v - b.data());
      worst_outside = std::max(worst_outside, std::abs(upper.compose_with_corner_kernel(b)));
    }
  }
  return {make_result("density-compose-step", worst, 1e-8),
          make_result("density-compose-outside-support", worst_outside, 0.0)};
}

std::vector<CheckResult> check_volume(std::int64_t points, int max_n, std::uint64_t seed) {
  std::vector<CheckResult> results;
  const std::vector<double> x3 = {0, 1, 2};
  results.push_back(make_result("volume-hand-value", std::abs(gt_volume(x3) - 1.0), 1e-12));

  double worst_sigmas = 0.0;
  for (int n = 3; n <= std::min(4, max_n); ++n) {
    const std::vector<double> x = n == 3 ? x3 : pinned_spectrum(4);
    RandomStream rng(seed + n);
    // tight bounding box: row of length m, entry i, lies in [x_i, x_{i+N-m}]
    double box_volume = 1.0;
    for (int m = n - 1; m >= 1; --m)
      for (int i = 0; i < m; ++i) box_volume *= x[i + n - m] - x[i];
    std::int64_t hits = 0;
    Pattern pattern(n - 1);
    for (int m = n - 1, r = 0; m >= 1; --m, ++r) pattern[r].resize(m);
    for (std::int64_t s = 0; s < points; ++s) {
      for (int m = n - 1, r = 0; m >= 1; --m, ++r)
        for (int i = 0; i < m; ++i)
          pattern[r][i] = x[i] + rng.uniform() * (x[i + n - m] - x[i]);
      hits += pattern_in_polytope(pattern, x);
    }
    const double rate = double(hits) / double(points);
    const double estimate = rate * box_volume;
    const double sigma = box_volume * std::sqrt(rate * (1.0 - rate) / double(points));
    worst_sigmas = std::max(worst_sigmas, std::abs(estimate - gt_volume(x)) / sigma);
  }
  results.push_back(make_result("volume-mc-hit-rate", worst_sigmas, 3.0));
  return results;
}

namespace {

// integral over Y interlacing X (cells [x_i, x_{i+1}]) of V(Y) hciz(Y, z),
// tensor Gauss-Legendre with `points` nodes per axis
std::complex<double> corner_step_integral(const std::vector<double>& x,
                                          std::span<const std::complex<double>> z, int points) {
  const int m = int(x.size()) - 1;
  const GaussLegendreRule& rule = gauss_legendre(points);
  std::vector<double> y(m);
  std::complex<double> total = 0.0;
  const std::function<void(int, double)> rec = [&](int axis, double weight) {
    if (axis == m) {
      total += weight * vandermonde(y) * hciz(y, z);
      return;
    }
    const double mid = 0.5 * (x[axis] + x[axis + 1]);
    const double half = 0.5 * (x[axis + 1] - x[axis]);
    for (int i = 0; i < points; ++i) {
      y[axis] = mid + half * rule.nodes[i];
      rec(axis + 1, weight * half * rule.weights[i]);
    }
  };
  rec(0, 1.0);
  return total;
}

}  // namespace

std::vector<CheckResult> check_hciz(std::int64_t samples, int max_n, std::uint64_t seed) {
  std::vector<CheckResult> results;
  using cd = std::complex<double>;

  {  // Monte Carlo agreement, diagonal and conjugated Z with the same spectrum
    const std::vector<double> x = {0, 1, 2};
    const std::vector<cd> z = {{0.0, 0.0}, {0.1, 0.0}, {0.3, 0.0}};
    const cd exact = hciz(x, z);
    Eigen::MatrixXcd zmat = Eigen::MatrixXcd::Zero(3, 3);
    zmat(1, 1) = 0.1;
    zmat(2, 2) = 0.3;
    RandomStream rng(seed);
    const McEstimate diag = laplace_mc(x, zmat, samples, rng);
    results.push_back(
        make_result("hciz-mc-diagonal", std::abs(diag.value - exact) / diag.standard_error, 3.0));
    RandomStream wrng(seed + 1);
    const Eigen::MatrixXcd w = haar_unitary(3, wrng);
    const Eigen::MatrixXcd conjugated = w * zmat * w.adjoint();
    RandomStream rng2(seed + 2);
    const McEstimate rotated = laplace_mc(x, conjugated, samples, rng2);
    results.push_back(make_result("hciz-mc-conjugated",
                                  std::abs(rotated.value - exact) / rotated.standard_error, 3.0));
  }

  {  // value at nearly zero Z is the total mass
    const std::vector<double> x = pinned_spectrum(3);
    const std::vector<cd> z = {{1e-6, 0.0}, {2e-6, 0.0}, {3e-6, 0.0}};
    results.push_back(make_result("hciz-small-z", std::abs(hciz(x, z) - 1.0), 1e-4));
  }

  {  // permutation invariance in z
    const std::vector<double> x = pinned_spectrum(4);
    std::vector<cd> z = {{0.4, 0.3}, {-0.35, 0.1}, {0.2, -0.25}, {0.05, 0.15}};
    const cd base = hciz(x, z);
    double worst = 0.0;
    RandomStream rng(seed + 3);
    for (int t = 0; t < 5; ++t) {
      for (std::size_t i = z.size(); i > 1; --i)
        std::swap(z[i - 1], z[rng.next_u64() % i]);
      worst = std::max(worst, std::abs(hciz(x, z) - base) / std::abs(base));
    }
    results.push_back(make_result("hciz-permutation-invariance", worst, 1e-12));

    // role symmetry: swapping the real spectra between the two slots
    const std::vector<double> zr = {-0.4, -0.1, 0.2, 0.45};
    std::vector<cd> zc(zr.size()), xc(x.size());
    for (std::size_t i = 0; i < zr.size(); ++i) zc[i] = zr[i];
    for (std::size_t i = 0; i < x.size(); ++i) xc[i] = x[i];
    const cd ab = hciz(x, zc);
    const cd ba = hciz(zr, xc);
    results.push_back(
        make_result("hciz-role-symmetry", std::abs(ab - ba) / std::abs(ab), 1e-12));
  }

  {  // corner step: embedding Z with a zero row/column averages over one corner
    const std::vector<cd> pool = {{0.4, 0.3}, {-0.35, 0.1}, {0.2, -0.25}};
    double worst = 0.0;
    for (int n = 2; n <= std::min(4, max_n); ++n) {
      const std::vector<double> x = pinned_spectrum(n);
      std::vector<cd> z_small(pool.begin(), pool.begin() + (n - 1));
      std::vector<cd> z_full = z_small;
      z_full.push_back(0.0);
      const cd lhs = hciz(x, z_full);
      double factorial = 1.0;
      for (int m = 2; m < n; ++m) factorial *= m;
      const cd rhs =
          factorial / vandermonde(x) * corner_step_integral(x, z_small, 24);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    results.push_back(make_result("hciz-corner-step", worst, 1e-6));
  }
  return results;
}

std::vector<CheckResult> check_tail_determinants(int instances, int max_n, std::uint64_t seed) {
  // This verifies a mathematical identity rather than a production code path
  // (the joint density never evaluates it), and both determinants suffer
  // amplified cancellation when the b's cluster, so both sides run in
  // quadruple precision; the 1e-10 bar then measures the identity itself.
  RandomStream rng(seed);
  double worst = 0.0;
  for (int t = 0; t < instances; ++t) {
    const int n = 2 + int(rng.next_u64() % std::uint64_t(max_n - 1));
    const std::vector<double> x = random_knots(n, rng);
    const double range = x.back() - x.front();
    for (int k = 1; k < n; ++k) {
      std::vector<double> b(k - 1);
      for (double& v : b) v = x.front() - 0.1 * range + 1.2 * range * rng.uniform();
      std::sort(b.begin(), b.end());

      // K x K matrix of window spline masses between consecutive b's
      std::vector<std::vector<__float128>> f(k, std::vector<__float128>(k));
      for (int i = 0; i < k; ++i) {
        const std::span<const double> window = std::span(x).subspan(i, n - k + 1);
        for (int j = 0; j < k; ++j) {
          const double lo = j == 0 ? -kInf : b[j - 1];
          const double hi = j == k - 1 ? kInf : b[j];
          f[i][j] = mass_above_exact(lo, window) - mass_above_exact(hi, window);
        }
      }
      const __float128 lhs = quad_determinant(std::move(f));

      // Row-reducing the tail-integral matrix leaves K-1 rows of first
      // differences, i.e. gap_i/(n-k+1) times a spline over the one-longer
      // window; each row contributes one such factor.
      __float128 rhs = 1;
      for (int i = 0; i + 1 < k; ++i)
        rhs *= (__float128(x[i + n - k + 1]) - x[i]) / __float128(n - k + 1);
      if (k >= 2) {
        const int len = n - k + 2;
        std::vector<std::vector<__float128>> m(k - 1, std::vector<__float128>(k - 1));
        for (int i = 0; i + 1 < k; ++i) {
          const std::span<const double> window = std::span(x).subspan(i, std::size_t(len));
          for (int j = 0; j + 1 < k; ++j)
            m[i][j] = __float128(len - 1) * dd_truncated_power(b[j], window, len - 2);
        }
        rhs *= quad_determinant(std::move(m));
      }

      __float128 scale = quad_abs(lhs) > quad_abs(rhs) ? quad_abs(lhs) : quad_abs(rhs);
      if (scale < 1e-12) scale = 1e-12;
      worst = std::max(worst, double(quad_abs(lhs - rhs) / scale));
    }
  }
  return {make_result("tail-integral-determinant-identity", worst, 1e-10)};
}

namespace {

// independent brute force: enumerate every integer pattern under X,
// reporting each full pattern to the callback
void enumerate_patterns(const Signature& top,
                        const std::function<void(const std::vector<Signature>&)>& visit) {
  std::vector<Signature> rows;
  const std::function<void(const Signature&)> rec = [&](const Signature& upper) {
    if (upper.size() == 1) {
      visit(rows);
      return;
    }
    const int m = int(upper.size()) - 1;
    Signature row(m);
    const std::function<void(int)> loop = [&](int pos) {
      if (pos == m) {
        rows.push_back(row);
        rec(row);
        rows.pop_back();
        return;
      }
      for (long long v = upper[pos]; v <= upper[pos + 1]; ++v) {
        if (pos > 0 && v < row[pos - 1]) continue;
        row[pos] = v;
        loop(pos + 1);
      }
    };
    loop(0);
  };
  rec(top);
}

void signatures_in_box(int length, long long lo, long long hi,
                       const std::function<void(const Signature&)>& visit) {
  Signature sig(length);
  const std::function<void(int, long long)> rec = [&](int pos, long long from) {
    if (pos == length) {
      visit(sig);
      return;
    }
    for (long long v = from; v <= hi; ++v) {
      sig[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, lo);
}

}  // namespace

std::vector<CheckResult> check_discrete_counting(int max_n) {
  long long mismatches = 0, sum_failures = 0;
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    signatures_in_box(n, 0, 4, [&](const Signature& x) {
      // row-K tallies from one full enumeration
      std::vector<std::map<Signature, long long>> tally(n);
      long long total = 0;
      enumerate_patterns(x, [&](const std::vector<Signature>& rows) {
        ++total;
        for (const Signature& row : rows) ++tally[row.size()][row];
      });
      if (count_schemes(x) != mpz_class(static_cast<long>(total))) ++mismatches;
      for (int k = 1; k < n; ++k) {
        const auto table = relative_dimension_table(x, k);
        mpq_class sum(0);
        for (const auto& [y, mass] : table) {
          sum += mass;
          // mass must equal (# patterns with row K = Y) / total
          const mpz_class num(static_cast<long>(tally[k][y]));
          const mpz_class den(static_cast<long>(total));
          mpq_class expected(num, den);
          expected.canonicalize();
          if (mass != expected) ++mismatches;
        }
        if (std::int64_t(table.size()) != std::int64_t(tally[k].size())) ++mismatches;
        if (sum != 1) ++sum_failures;
      }
    });
  }
  return {make_result("discrete-count-vs-bruteforce", double(mismatches), 0.5),
          make_result("discrete-reldim-sums-to-one", double(sum_failures), 0.5)};
}

std::vector<CheckResult> check_discrete_scaling() {
  const std::vector<double> x = {0, 1, 2};
  const std::vector<std::vector<double>> points = {{1.0}};
  std::vector<double> diffs;
  for (long long l : {10, 20, 40})
    diffs.push_back(scaling_limit_compare(x, 1, l, points)[0].abs_difference);
  const double worst_step = std::max(diffs[1] - diffs[0], diffs[2] - diffs[1]);
  // strictly decreasing differences: every step must be negative
  return {{"discrete-scaling-trend", worst_step, 0.0, worst_step < 0.0}};
}

std::vector<CheckResult> verify_suite(std::string_view name, const VerifyOptions& options) {
  if (options.max_n > 8)
    fail(errc::resource_limit, "continuous verification is budgeted to N <= 8");
  if (options.discrete_max_n > 5)
    fail(errc::resource_limit, "discrete verification is budgeted to N <= 5");
  if (options.max_n < 2 || options.discrete_max_n < 1)
    fail(errc::invalid_argument, "verification budgets must allow N >= 2");

  std::vector<CheckResult> results;
  const auto append = [&results](std::vector<CheckResult> batch) {
    for (CheckResult& r : batch) results.push_back(std::move(r));
  };
  const bool all = name == "all";
  bool known = all;
  if (all || name == "splines") {
    known = true;
    append(check_spline_identities(options.knot_vectors, options.grid_points, options.seed));
  }
  if (all || name == "kernel") {
    known = true;
    append(check_kernel_top_step(options.max_n, options.grid_points, options.seed));
  }
  if (all || name == "theorem") {
    known = true;
    append(check_corner_k1(options.samples, options.seed, options.threads));
    append(check_corner_multivariate(options.max_n, options.samples, options.seed,
                                     options.threads));
    append(check_normalization(options.max_n));
  }
  if (all || name == "volume") {
    known = true;
    append(check_volume(options.volume_points, options.max_n, options.seed));
  }
  if (all || name == "hciz") {
    known = true;
    append(check_hciz(options.samples, options.max_n, options.seed));
  }
  if (all || name == "recurrence") {
    known = true;
    append(check_composition(options.max_n, options.seed));
    append(check_tail_determinants(100, options.max_n, options.seed));
  }
  if (all || name == "discrete") {
    known = true;
    append(check_discrete_counting(options.discrete_max_n));
    append(check_discrete_scaling());
  }
  if (!known)
    fail(errc::invalid_argument,
         "unknown suite '" + std::string(name) +
             "'; expected one of splines, kernel, theorem, volume, hciz, recurrence, discrete, all");
  return results;
}

std::string report_json(std::span<const CheckResult> results) {
  nlohmann::json out;
  out["results"] = nlohmann::json::array();
  bool all_pass = true;
  for (const CheckResult& r : results) {
    out["results"].push_back({{"test", r.name},
                              {"statistic", r.statistic},
                              {"threshold", r.threshold},
                              {"pass", r.pass}});
    all_pass = all_pass && r.pass;
  }
  out["all_pass"] = all_pass;
  return out.dump(2);
}

}  // namespace gtcorners
