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

#ifndef GTCORNERS_SPLINES_HPP
#define GTCORNERS_SPLINES_HPP

#include <functional>
#include <span>
#include <vector>

namespace gtcorners {

/// Knot vectors below this conditioning floor are refused: evaluating the
/// defining formulas loses ~16 - log10(min_gap/range) digits to cancellation.
inline constexpr double kKnotConditioningFloor = 1e-8;

/// Validates a knot vector: n >= 2, strictly increasing, finite, and
/// min_gap / (y_n - y_1) >= kKnotConditioningFloor (else a conditioning error).
void require_knots(std::span<const double> knots);

/// One-sided power (x)_+^s = x^s for x > 0, else 0.  Conventions: 0^0 = 0 at
/// x <= 0 and x^0 = 1 for x > 0, so s = 0 gives the step function.
/// Negative s is an argument error.
double truncated_power(double x, int s);

/// Divided difference f[y_1,...,y_n] over strictly increasing points,
/// computed by the triangular recursion.  A single point gives f(y_1);
/// repeated points are an argument error (confluent case unsupported).
double divided_difference(const std::function<double(double)>& f, std::span<const double> points);

/// Density of the fundamental spline with knots Y = (y_1 < ... < y_n):
/// the piecewise polynomial of degree n-2 supported on [y_1, y_n] with unit
/// integral, equal to (n-1) * g[Y] with g(x) = (x-a)_+^{n-2}.  Evaluated by
/// the positive B-spline recurrence (exact zero outside support, never
/// negative).  Right-continuous at knots; n = 2 gives 1/(y_2-y_1) on
/// [y_1, y_2).
double fundamental_spline(double a, std::span<const double> knots);

/// Same value via the literal alternating truncated-power sum
/// (n-1) * sum_{y_i > a} (y_i-a)^{n-2} / prod_{r != i}(y_i-y_r).
/// Kept as an independent route for cross-checks; subject to cancellation
/// for clustered knots.
double fundamental_spline_power_form(double a, std::span<const double> knots);

/// Normalized variant with max-value scaling: fundamental value times
/// (y_n - y_1) / (n - 1).
double b_spline(double a, std::span<const double> knots);

/// Integral of the fundamental spline over [b, c] (b <= c; either end may be
/// infinite), evaluated in closed form through divided differences of
/// (x-t)_+^{n-1}, not by quadrature.
double spline_tail_integral(double b, double c, std::span<const double> knots);

/// Polynomial-per-interval representation.  Piece i covers
/// [breakpoints[i], breakpoints[i+1]) and stores monomial coefficients in the
/// local variable (a - breakpoints[i]); value is 0 outside
/// [breakpoints.front(), breakpoints.back()).
struct PiecewisePolynomial {
  std::vector<double> breakpoints;
  std::vector<std::vector<double>> coefficients;

  double evaluate(double a) const;
  /// k-th derivative at `a` of the piece selected by `a` (right-continuous);
  /// pass from_left = true to use the piece ending at `a` instead.
  double derivative(double a, int order, bool from_left = false) const;
  double integral() const;
};

/// Exact piecewise-polynomial form of the fundamental spline.
PiecewisePolynomial to_piecewise(std::span<const double> knots);

}  // namespace gtcorners

#endif  // GTCORNERS_SPLINES_HPP
