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

#include "gtcorners/splines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gtcorners/errors.hpp"
#include "gtcorners/geometry.hpp"

namespace gtcorners {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Local polynomials in the variable u = a - left_breakpoint, coefficient
// vector by ascending power.
using Poly = std::vector<double>;

// p(u) * (c0 + c1 u)
Poly mul_linear(const Poly& p, double c0, double c1) {
  Poly out(p.size() + 1, 0.0);
  for (std::size_t m = 0; m < p.size(); ++m) {
    out[m] += c0 * p[m];
    out[m + 1] += c1 * p[m];
  }
  return out;
}

void add_into(Poly& acc, const Poly& p) {
  if (acc.size() < p.size()) acc.resize(p.size(), 0.0);
  for (std::size_t m = 0; m < p.size(); ++m) acc[m] += p[m];
}

double horner(const Poly& p, double u) {
  double v = 0.0;
  for (std::size_t m = p.size(); m-- > 0;) v = v * u + p[m];
  return v;
}

}  // namespace

void require_knots(std::span<const double> knots) {
  if (knots.size() < 2) fail(errc::invalid_argument, "knot vector needs at least 2 points");
  require_spectrum(knots, /*strict=*/true, "knot vector");
  const double range = knots.back() - knots.front();
  if (!(min_gap(knots) >= kKnotConditioningFloor * range))
    fail(errc::conditioning, "knot vector too clustered: min gap below 1e-8 of the range");
}

double truncated_power(double x, int s) {
  if (s < 0) fail(errc::invalid_argument, "truncated power needs exponent >= 0");
  if (!(x > 0.0)) return 0.0;
  if (s == 0) return 1.0;
  return std::pow(x, s);
}

double divided_difference(const std::function<double(double)>& f, std::span<const double> points) {
  if (points.empty()) fail(errc::invalid_argument, "divided difference needs at least 1 point");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i - 1] < points[i]))
      fail(errc::invalid_argument, "divided difference points must be strictly increasing");
  const std::size_t n = points.size();
  std::vector<double> table(n);
  for (std::size_t i = 0; i < n; ++i) table[i] = f(points[i]);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = 0; i + level < n; ++i)
      table[i] = (table[i + 1] - table[i]) / (points[i + level] - points[i]);
  return table[0];
}

double fundamental_spline(double a, std::span<const double> y) {
  require_knots(y);
  const std::size_t n = y.size();
  if (a < y.front() || a >= y.back()) return 0.0;
  // Order-1 indicators, then the positive two-term recurrence up to order n-1.
  // All products are of nonnegative quantities whenever the factor multiplies
  // a basis value whose support contains a, so the result cannot go negative.
  std::vector<double> b(n - 1, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) b[i] = (y[i] <= a && a < y[i + 1]) ? 1.0 : 0.0;
  for (std::size_t order = 2; order + 1 <= n; ++order) {
    for (std::size_t i = 0; i + order < n; ++i) {
      const double left = (a - y[i]) / (y[i + order - 1] - y[i]);
      const double right = (y[i + order] - a) / (y[i + order] - y[i + 1]);
      b[i] = left * b[i] + right * b[i + 1];
    }
  }
  return b[0] * double(n - 1) / (y.back() - y.front());
}

double fundamental_spline_power_form(double a, std::span<const double> y) {
  require_knots(y);
  const std::size_t n = y.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double numer = truncated_power(y[i] - a, int(n) - 2);
    if (numer == 0.0) continue;
    double denom = 1.0;
    for (std::size_t r = 0; r < n; ++r)
      if (r != i) denom *= y[i] - y[r];
    sum += numer / denom;
  }
  return double(n - 1) * sum;
}

double b_spline(double a, std::span<const double> y) {
  return fundamental_spline(a, y) * (y.back() - y.front()) / double(y.size() - 1);
}

namespace {

// Mass of the fundamental spline above t: divided difference over the knots
// of x -> (x - t)_+^{n-1}.  Equals 1 for t <= y_1 and 0 for t >= y_n.
double mass_above(double t, std::span<const double> y) {
  if (t == -kInf) return 1.0;
  if (t == kInf) return 0.0;
  const int s = int(y.size()) - 1;
  return divided_difference([t, s](double x) { return truncated_power(x - t, s); }, y);
}

}  // namespace

double spline_tail_integral(double b, double c, std::span<const double> y) {
  require_knots(y);
  if (std::isnan(b) || std::isnan(c) || !(b <= c))
    fail(errc::invalid_argument, "integration bounds must satisfy b <= c");
  if (b == c) return 0.0;
  return mass_above(b, y) - mass_above(c, y);
}

double PiecewisePolynomial::evaluate(double a) const {
  if (breakpoints.size() < 2 || a < breakpoints.front() || a >= breakpoints.back()) return 0.0;
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), a);
  const std::size_t piece = std::size_t(it - breakpoints.begin()) - 1;
  return horner(coefficients[piece], a - breakpoints[piece]);
}

double PiecewisePolynomial::derivative(double a, int order, bool from_left) const {
  if (order < 0) fail(errc::invalid_argument, "derivative order must be >= 0");
  if (breakpoints.size() < 2) return 0.0;
  std::size_t piece;
  if (from_left) {
    if (a <= breakpoints.front() || a > breakpoints.back()) return 0.0;
    const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), a);
    piece = std::size_t(it - breakpoints.begin()) - 1;
  } else {
    if (a < breakpoints.front() || a >= breakpoints.back()) return 0.0;
    const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), a);
    piece = std::size_t(it - breakpoints.begin()) - 1;
  }
  const Poly& p = coefficients[piece];
  const double u = a - breakpoints[piece];
  double v = 0.0;
  for (std::size_t m = p.size(); m-- > std::size_t(order);) {
    double factorial = 1.0;
    for (int j = 0; j < order; ++j) factorial *= double(m - std::size_t(j));
    v = v * u + p[m] * factorial;
  }
  return v;
}

double PiecewisePolynomial::integral() const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double h = breakpoints[i + 1] - breakpoints[i];
    double piece = 0.0, hm = h;
    for (std::size_t m = 0; m < coefficients[i].size(); ++m) {
      piece += coefficients[i][m] * hm / double(m + 1);
      hm *= h;
    }
    total += piece;
  }
  return total;
}

PiecewisePolynomial to_piecewise(std::span<const double> y) {
  require_knots(y);
  const std::size_t n = y.size();
  PiecewisePolynomial out;
  out.breakpoints.assign(y.begin(), y.end());
  out.coefficients.resize(n - 1);
  const double scale = double(n - 1) / (y.back() - y.front());
  // Run the same recurrence as fundamental_spline, with the point a replaced
  // by the local polynomial a = y_piece + u; all steps stay polynomial.
  for (std::size_t piece = 0; piece + 1 < n; ++piece) {
    std::vector<Poly> b(n - 1);
    b[piece] = Poly{1.0};
    for (std::size_t order = 2; order + 1 <= n; ++order) {
      for (std::size_t i = 0; i + order < n; ++i) {
        const double dl = y[i + order - 1] - y[i];
        const double dr = y[i + order] - y[i + 1];
        Poly next;
        if (!b[i].empty()) add_into(next, mul_linear(b[i], (y[piece] - y[i]) / dl, 1.0 / dl));
        if (!b[i + 1].empty())
          add_into(next, mul_linear(b[i + 1], (y[i + order] - y[piece]) / dr, -1.0 / dr));
        b[i] = std::move(next);
      }
    }
    Poly& c = b[0];
    if (c.empty()) c = Poly{0.0};
    for (double& v : c) v *= scale;
    out.coefficients[piece] = std::move(c);
  }
  return out;
}

}  // namespace gtcorners
