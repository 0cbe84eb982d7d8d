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

#ifndef GTCORNERS_DENSITY_HPP
#define GTCORNERS_DENSITY_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace gtcorners {

/// Work limit for the quadrature-backed members of CornerDensity.
struct QuadratureSpec {
  /// Extra Gauss-Legendre points per axis on top of the exactness requirement.
  int extra_points = 1;
  /// Cap on total integrand evaluations per call.
  std::uint64_t max_evaluations = std::uint64_t(1) << 27;
};

/// Normalization constant of the joint eigenvalue density of the K x K corner:
/// prod_{i=1}^{K-1} binom(N-K+i, i).  Errors when K is outside [1, N-1].
double c_constant(int n, int k);
double log_c_constant(int n, int k);

/// Transition density of one corner step (N -> N-1):
/// (N-1)! * vandermonde(A) / vandermonde(X) when A interlaces X, else 0.
double kernel_density(std::span<const double> x, std::span<const double> a);

/// Euclidean volume of the polytope of triangular patterns below top row X:
/// vandermonde(X) / prod_{m=1}^{N-1} m!.
double gt_volume(std::span<const double> x);

/// Spherical-integral value: the expected exponential of trace(Z U X U*) over
/// the unitary group, evaluated through divided differences of e^{z x} in z
/// (absorbs the z-Vandermonde exactly, so clustered z stay accurate).
/// Entries of z must be pairwise distinct; x strictly increasing.
std::complex<double> hciz(std::span<const double> x, std::span<const std::complex<double>> z);

/// Joint eigenvalue density of the K x K upper-left corner of U diag(X) U*
/// with Haar U: c * vandermonde(A) * det[spline(a_j; x_i..x_{i+N-K})] divided
/// by the long-gap product prod_{j-i >= N-K+1}(x_j - x_i).
class CornerDensity {
 public:
  /// X strictly increasing (length N >= 2), 1 <= K <= N-1, K <= 32.
  CornerDensity(std::vector<double> x, int k);

  int dimension() const { return int(x_.size()); }
  int corner_size() const { return k_; }
  const std::vector<double>& spectrum() const { return x_; }

  /// Density at a weakly increasing point of length K.  Zero outside
  /// [x_1, x_N]^K and at points with coinciding coordinates (K >= 2).
  double operator()(std::span<const double> a) const;

  /// Integral of the density over a_j in [lower_j, upper_j] intersected with
  /// the ordered cone a_1 <= ... <= a_K.  Bounds may be infinite.  Exact
  /// cell-wise Gauss-Legendre (the density is polynomial per knot cell).
  double region_probability(std::span<const double> lower, std::span<const double> upper,
                            const QuadratureSpec& quad = {}) const;

  /// Probability of the event {cell(a_j) = cells[j]}, where cells index the
  /// knot intervals [x_c, x_{c+1}); cells must be weakly increasing.
  double cell_probability(std::span<const int> cells, const QuadratureSpec& quad = {}) const;

  /// Total mass (equals 1 up to quadrature rounding).
  double normalization(const QuadratureSpec& quad = {}) const;

  /// Integral of density(A) * kernel(A -> B) over A: the density of the
  /// (K-1) x (K-1) corner evaluated at B, by the projection consistency of
  /// corner steps.  Requires K >= 2 and |B| = K-1.
  double compose_with_corner_kernel(std::span<const double> b,
                                    const QuadratureSpec& quad = {}) const;

  /// Density formula without ordering checks (symmetric in the entries of a);
  /// used by the quadrature driver and by verification code.
  double unchecked_density(std::span<const double> a) const;

 private:
  std::vector<double> x_;
  int k_;
  bool log_form_;        // N > 20: accumulate in logs, exponentiate once
  double c_;             // direct form
  double gap_product_;   // direct form
  double log_c_;         // log form
  double log_gap_;       // log form
};

}  // namespace gtcorners

#endif  // GTCORNERS_DENSITY_HPP
