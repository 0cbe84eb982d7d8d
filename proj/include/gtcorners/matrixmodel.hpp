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

#ifndef GTCORNERS_MATRIXMODEL_HPP
#define GTCORNERS_MATRIXMODEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gtcorners/geometry.hpp"

namespace gtcorners {

/// Deterministic random source.  Equal (seed, stream) pairs reproduce equal
/// sequences on every platform; derive() yields disjoint substreams for
/// parallel work keyed by the same seed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  RandomStream derive(std::uint64_t stream) const { return RandomStream(seed_, stream); }
  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }
  double uniform();                         // [0, 1)
  double gaussian();                        // standard normal (Box-Muller)
  std::complex<double> gaussian_complex();  // complex standard normal, E|g|^2 = 1

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-distributed unitary via QR of a complex Ginibre matrix with the
/// R-diagonal phase correction (plain QR is not Haar without it).
Eigen::MatrixXcd haar_unitary(int n, RandomStream& rng);

/// H = U diag(X) U* with Haar U; X may have ties.  Result is exactly
/// self-adjoint (symmetrized against roundoff).
Eigen::MatrixXcd orbit_sample(std::span<const double> x, RandomStream& rng);

/// Upper-left K x K block.
Eigen::MatrixXcd corner(const Eigen::MatrixXcd& h, int k);

/// Ascending eigenvalues of a self-adjoint matrix.  Inputs further than
/// 1e-12 (relative) from self-adjoint are rejected.
std::vector<double> hermitian_spectrum(const Eigen::MatrixXcd& h);

/// Spectra of all proper corners, rows N-1 down to 1.  Rows are nudged into
/// the exact interlacing order (eigensolver roundoff otherwise breaks the
/// containment by ~1e-15), so pattern_in_polytope always holds.
Pattern gt_pattern_of(const Eigen::MatrixXcd& h);

struct McEstimate {
  std::complex<double> value;
  double standard_error;
};

/// Monte Carlo mean of exp(trace(Z H)) over orbit samples, with delete-one
/// jackknife standard error.  A bound max|trace| > 700 is rejected up front
/// (exp would overflow; rescale X or Z).
McEstimate laplace_mc(std::span<const double> x, const Eigen::MatrixXcd& z, std::int64_t samples,
                      RandomStream& rng);

/// Batch of corner-spectrum samples, row-major count x k.  Work is split
/// into fixed blocks, each on its own derived stream, so the output is
/// byte-identical for any thread count (threads <= 1 runs inline).
std::vector<double> sample_corner_spectra(std::span<const double> x, int k, std::int64_t count,
                                          std::uint64_t seed, int threads);

/// Batch of full corner patterns under the same block scheme.
std::vector<Pattern> sample_patterns(std::span<const double> x, std::int64_t count,
                                     std::uint64_t seed, int threads);

}  // namespace gtcorners

#endif  // GTCORNERS_MATRIXMODEL_HPP
