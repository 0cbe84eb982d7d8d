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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "gtcorners/errors.hpp"
#include "gtcorners/geometry.hpp"
#include "gtcorners/quadrature.hpp"
#include "gtcorners/splines.hpp"

namespace gtcorners {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxDirectN = 20;  // above this, assemble in log space

double binomial(int n, int r) {
  double v = 1.0;
  for (int i = 1; i <= r; ++i) v *= double(n - r + i) / double(i);
  return v;
}

double log_superfactorial(int n) {  // log prod_{m=1}^{n-1} m!
  double s = 0.0;
  for (int m = 2; m < n; ++m) s += std::lgamma(m + 1);
  return s;
}

// determinant of a small matrix by LU with partial pivoting, in log form:
// returns {log |det|, sign}; sign 0 means exact zero.
std::pair<double, int> log_det(Eigen::MatrixXd m) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(std::move(m));
  int sign = lu.permutationP().determinant();
  double log_abs = 0.0;
  for (Eigen::Index i = 0; i < lu.matrixLU().rows(); ++i) {
    const double d = lu.matrixLU()(i, i);
    if (d == 0.0) return {-kInf, 0};
    log_abs += std::log(std::abs(d));
    if (d < 0.0) sign = -sign;
  }
  return {log_abs, sign};
}

}  // namespace

double c_constant(int n, int k) {
  if (k < 1 || k > n - 1) fail(errc::invalid_argument, "corner size K must satisfy 1 <= K <= N-1");
  double c = 1.0;
  for (int i = 1; i < k; ++i) c *= binomial(n - k + i, i);
  return c;
}

double log_c_constant(int n, int k) {
  if (k < 1 || k > n - 1) fail(errc::invalid_argument, "corner size K must satisfy 1 <= K <= N-1");
  double s = 0.0;
  for (int i = 1; i < k; ++i)
    s += std::lgamma(n - k + i + 1) - std::lgamma(i + 1) - std::lgamma(n - k + 1);
  return s;
}

double kernel_density(std::span<const double> x, std::span<const double> a) {
  if (x.size() < 2) fail(errc::invalid_argument, "kernel needs N >= 2");
  require_spectrum(x, /*strict=*/true, "spectrum X");
  if (a.size() + 1 != x.size())
    fail(errc::dimension_mismatch, "inner tuple must have length N-1");
  for (double v : a)
    if (!std::isfinite(v)) fail(errc::invalid_argument, "inner tuple contains a non-finite entry");
  if (!interlaces(a, x)) return 0.0;
  const int n = int(x.size());
  if (n <= kMaxDirectN) {
    double factorial = 1.0;
    for (int m = 2; m < n; ++m) factorial *= m;
    return factorial * vandermonde(a) / vandermonde(x);
  }
  const double va = vandermonde(a);
  if (va == 0.0) return 0.0;
  return std::exp(std::lgamma(n) + log_vandermonde(a) - log_vandermonde(x));
}

double gt_volume(std::span<const double> x) {
  if (x.size() < 2) fail(errc::invalid_argument, "volume needs N >= 2");
  require_spectrum(x, /*strict=*/true, "spectrum X");
  const int n = int(x.size());
  double v;
  if (n <= kMaxDirectN) {
    double superfactorial = 1.0;
    for (int m = 2; m < n; ++m)
      for (int j = 2; j <= m; ++j) superfactorial *= j;
    v = vandermonde(x) / superfactorial;
  } else {
    v = std::exp(log_vandermonde(x) - log_superfactorial(n));
  }
  if (!std::isfinite(v)) fail(errc::range_overflow, "polytope volume overflows double range");
  return v;
}

std::complex<double> hciz(std::span<const double> x, std::span<const std::complex<double>> z) {
  require_spectrum(x, /*strict=*/true, "spectrum X");
  if (x.empty()) fail(errc::invalid_argument, "hciz needs N >= 1");
  if (z.size() != x.size()) fail(errc::dimension_mismatch, "X and Z must have equal length");
  const int n = int(x.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (z[i] == z[j])
        fail(errc::degenerate_spectrum, "coincident z entries (confluent case unsupported)");
  double max_re = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      max_re = std::max(max_re, std::abs(z[i].real() * x[j]));
  if (max_re > 700.0)
    fail(errc::range_overflow, "exp(z*x) overflows double range; rescale X or Z");

  // exp(w) - 1 without cancellation for small w
  const auto cexpm1 = [](std::complex<double> w) {
    const double u = w.real(), v = w.imag();
    const double s = std::sin(0.5 * v);
    return std::complex<double>(std::expm1(u) * std::cos(v) - 2.0 * s * s,
                                std::exp(u) * std::sin(v));
  };

  // Row i of D holds divided differences of t -> e^{t x_j} over z_1..z_{i+1};
  // this equals L * [e^{z_i x_j}] with det L = 1 / V(z), so
  // det D = det[e^{z_i x_j}] / V(z) with no explicit division by V(z).
  Eigen::MatrixXcd d(n, n);
  std::vector<std::complex<double>> table(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) table[i] = std::exp(z[i] * x[j]);
    d(0, j) = table[0];
    for (int level = 1; level < n; ++level) {
      for (int i = 0; i + level < n; ++i) {
        if (level == 1)
          table[i] = table[i] * cexpm1((z[i + 1] - z[i]) * x[j]) / (z[i + 1] - z[i]);
        else
          table[i] = (table[i + 1] - table[i]) / (z[i + level] - z[i]);
      }
      d(level, j) = table[0];
    }
  }
  std::complex<double> det = Eigen::PartialPivLU<Eigen::MatrixXcd>(d).determinant();
  double log_vx = log_vandermonde(x);
  return det * std::exp(log_superfactorial(n) - log_vx);
}

CornerDensity::CornerDensity(std::vector<double> x, int k) : x_(std::move(x)), k_(k) {
  if (x_.size() < 2) fail(errc::invalid_argument, "spectrum needs N >= 2");
  require_spectrum(x_, /*strict=*/true, "spectrum X");
  const int n = int(x_.size());
  if (k_ < 1 || k_ > n - 1) fail(errc::invalid_argument, "corner size K must satisfy 1 <= K <= N-1");
  if (k_ > 32) fail(errc::invalid_argument, "corner size K above supported limit 32");
  // validate every spline window up front so evaluation errors surface here
  const int window = n - k_ + 1;
  for (int i = 0; i < k_; ++i) require_knots(std::span(x_).subspan(i, window));
  log_form_ = n > kMaxDirectN;
  c_ = 0.0;
  gap_product_ = 1.0;
  log_c_ = log_c_constant(n, k_);
  log_gap_ = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (j - i >= n - k_ + 1) log_gap_ += std::log(x_[j] - x_[i]);
  if (!log_form_) {
    c_ = c_constant(n, k_);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (j - i >= n - k_ + 1) gap_product_ *= x_[j] - x_[i];
  }
}

double CornerDensity::unchecked_density(std::span<const double> a) const {
  if (int(a.size()) != k_) fail(errc::dimension_mismatch, "evaluation point must have length K");
  const int n = int(x_.size());
  const int window = n - k_ + 1;
  const double va = vandermonde(a);
  if (k_ >= 2 && va == 0.0) return 0.0;
  Eigen::MatrixXd splines(k_, k_);
  for (int j = 0; j < k_; ++j) {
    bool column_zero = true;
    for (int i = 0; i < k_; ++i) {
      splines(i, j) = fundamental_spline(a[j], std::span(x_).subspan(i, window));
      column_zero = column_zero && splines(i, j) == 0.0;
    }
    if (column_zero) return 0.0;
  }
  if (!log_form_) {
    const double det = Eigen::PartialPivLU<Eigen::MatrixXd>(splines).determinant();
    return c_ * va * det / gap_product_;
  }
  const auto [log_abs_det, det_sign] = log_det(std::move(splines));
  if (det_sign == 0) return 0.0;
  double log_va = 0.0;
  int va_sign = va > 0.0 ? 1 : -1;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) log_va += std::log(std::abs(a[j] - a[i]));
  return det_sign * va_sign * std::exp(log_c_ + log_va + log_abs_det - log_gap_);
}

double CornerDensity::operator()(std::span<const double> a) const {
  if (int(a.size()) != k_) fail(errc::dimension_mismatch, "evaluation point must have length K");
  for (double v : a)
    if (!std::isfinite(v)) fail(errc::invalid_argument, "evaluation point has a non-finite entry");
  if (!is_weakly_increasing(a))
    fail(errc::invalid_argument, "evaluation point must be weakly increasing");
  double v = unchecked_density(a);
  if (v < 0.0 && v > -1e-9) v = 0.0;  // documented numerical floor
  return v;
}

double CornerDensity::region_probability(std::span<const double> lower,
                                         std::span<const double> upper,
                                         const QuadratureSpec& quad) const {
  if (int(lower.size()) != k_ || int(upper.size()) != k_)
    fail(errc::dimension_mismatch, "bound lists must have length K");
  for (int j = 0; j < k_; ++j)
    if (std::isnan(lower[j]) || std::isnan(upper[j]))
      fail(errc::invalid_argument, "bounds must not be NaN");
  const OrderedRegion region = make_region(x_, lower, upper);
  const int degree = int(x_.size()) - 2;  // V(A) degree + spline degree per axis
  const int points = (degree + 2) / 2 + quad.extra_points;
  return integrate_ordered_cells(region, points, quad.max_evaluations,
                                 [this](std::span<const double> a) { return unchecked_density(a); });
}

double CornerDensity::cell_probability(std::span<const int> cells,
                                       const QuadratureSpec& quad) const {
  if (int(cells.size()) != k_) fail(errc::dimension_mismatch, "cell list must have length K");
  const int ncells = int(x_.size()) - 1;
  for (int j = 0; j < k_; ++j) {
    if (cells[j] < 0 || cells[j] >= ncells)
      fail(errc::invalid_argument, "cell index out of range");
    if (j > 0 && cells[j] < cells[j - 1])
      fail(errc::invalid_argument, "cell indices must be weakly increasing");
  }
  OrderedRegion region;
  region.cuts = x_;
  region.lo_cell.assign(cells.begin(), cells.end());
  region.hi_cell.assign(cells.begin(), cells.end());
  const int degree = int(x_.size()) - 2;
  const int points = (degree + 2) / 2 + quad.extra_points;
  return integrate_ordered_cells(region, points, quad.max_evaluations,
                                 [this](std::span<const double> a) { return unchecked_density(a); });
}

double CornerDensity::normalization(const QuadratureSpec& quad) const {
  const std::vector<double> lo(k_, -kInf), hi(k_, kInf);
  return region_probability(lo, hi, quad);
}

double CornerDensity::compose_with_corner_kernel(std::span<const double> b,
                                                 const QuadratureSpec& quad) const {
  if (k_ < 2) fail(errc::invalid_argument, "composition needs K >= 2");
  if (int(b.size()) != k_ - 1)
    fail(errc::dimension_mismatch, "target tuple must have length K-1");
  for (double v : b)
    if (!std::isfinite(v)) fail(errc::invalid_argument, "target tuple has a non-finite entry");
  if (!is_weakly_increasing(b))
    fail(errc::invalid_argument, "target tuple must be weakly increasing");
  const double vb = vandermonde(b);
  if (vb == 0.0) return 0.0;
  // Domain: a_1 <= b_1 <= a_2 <= ... <= b_{K-1} <= a_K, i.e. per-variable
  // bounds [b_{j-1}, b_j]; the kernel indicator is identically 1 there.
  std::vector<double> lower(k_), upper(k_);
  for (int j = 0; j < k_; ++j) {
    lower[j] = j == 0 ? -kInf : b[j - 1];
    upper[j] = j == k_ - 1 ? kInf : b[j];
  }
  double factorial = 1.0;
  for (int m = 2; m < k_; ++m) factorial *= m;
  const double kernel_scale = factorial * vb;
  const OrderedRegion region = make_region(x_, lower, upper);
  const int degree = int(x_.size()) - 2;
  const int points = (degree + 2) / 2 + quad.extra_points;
  return integrate_ordered_cells(region, points, quad.max_evaluations,
                                 [this, kernel_scale](std::span<const double> a) {
                                   return unchecked_density(a) * kernel_scale / vandermonde(a);
                                 });
}

}  // namespace gtcorners
