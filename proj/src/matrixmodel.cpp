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

#include "gtcorners/matrixmodel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "gtcorners/errors.hpp"

namespace gtcorners {

namespace {

constexpr std::int64_t kSampleBlock = 1024;

void run_blocks(std::int64_t nblocks, int threads, const std::function<void(std::int64_t)>& work) {
  if (threads <= 1 || nblocks <= 1) {
    for (std::int64_t b = 0; b < nblocks; ++b) work(b);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  const int nworkers = int(std::min<std::int64_t>(threads, nblocks));
  pool.reserve(nworkers);
  for (int t = 0; t < nworkers; ++t)
    pool.emplace_back([&] {
      for (std::int64_t b = next.fetch_add(1); b < nblocks; b = next.fetch_add(1)) work(b);
    });
  for (std::thread& t : pool) t.join();
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(stream),
                    std::uint32_t(stream >> 32)};
  engine_.seed(seq);
}

double RandomStream::uniform() {
  return double(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * M_PI * u2);
  has_spare_ = true;
  return r * std::cos(2.0 * M_PI * u2);
}

std::complex<double> RandomStream::gaussian_complex() {
  return {gaussian() * M_SQRT1_2, gaussian() * M_SQRT1_2};
}

Eigen::MatrixXcd haar_unitary(int n, RandomStream& rng) {
  if (n < 1) fail(errc::invalid_argument, "unitary size must be >= 1");
  Eigen::MatrixXcd g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = rng.gaussian_complex();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd u = qr.householderQ();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> r = qr.matrixQR()(j, j);
    const double mag = std::abs(r);
    u.col(j) *= mag == 0.0 ? 1.0 : r / mag;
  }
  return u;
}

Eigen::MatrixXcd orbit_sample(std::span<const double> x, RandomStream& rng) {
  require_spectrum(x, /*strict=*/false, "spectrum X");
  if (x.empty()) fail(errc::invalid_argument, "spectrum must be nonempty");
  const int n = int(x.size());
  const Eigen::MatrixXcd u = haar_unitary(n, rng);
  const Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(x.data(), n);
  Eigen::MatrixXcd h = u * d.asDiagonal() * u.adjoint();
  return 0.5 * (h + h.adjoint().eval());
}

Eigen::MatrixXcd corner(const Eigen::MatrixXcd& h, int k) {
  if (h.rows() != h.cols()) fail(errc::dimension_mismatch, "matrix must be square");
  if (k < 1 || k > h.rows()) fail(errc::dimension_mismatch, "corner size out of range");
  return h.topLeftCorner(k, k);
}

std::vector<double> hermitian_spectrum(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) fail(errc::dimension_mismatch, "matrix must be square");
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale)
    fail(errc::invalid_argument, "matrix is not self-adjoint within 1e-12");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    fail(errc::conditioning, "eigenvalue iteration failed to converge");
  const Eigen::VectorXd ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

Pattern gt_pattern_of(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) fail(errc::dimension_mismatch, "matrix must be square");
  const int n = int(h.rows());
  if (n < 2) fail(errc::invalid_argument, "pattern extraction needs N >= 2");
  std::vector<double> upper = hermitian_spectrum(h);
  Pattern pattern;
  pattern.reserve(n - 1);
  for (int m = n - 1; m >= 1; --m) {
    std::vector<double> row = hermitian_spectrum(corner(h, m));
    for (int i = 0; i < m; ++i) row[i] = std::clamp(row[i], upper[i], upper[i + 1]);
    pattern.push_back(row);
    upper = std::move(row);
  }
  return pattern;
}

McEstimate laplace_mc(std::span<const double> x, const Eigen::MatrixXcd& z, std::int64_t samples,
                      RandomStream& rng) {
  require_spectrum(x, /*strict=*/false, "spectrum X");
  if (x.empty()) fail(errc::invalid_argument, "spectrum must be nonempty");
  if (z.rows() != z.cols() || z.rows() != Eigen::Index(x.size()))
    fail(errc::dimension_mismatch, "Z must be N x N");
  if (samples < 1) fail(errc::invalid_argument, "sample count must be >= 1");
  double x_norm = 0.0;
  for (double v : x) x_norm += v * v;
  const double bound = z.norm() * std::sqrt(x_norm);  // |tr(ZH)| <= |Z|_F |H|_F
  if (bound > 700.0)
    fail(errc::range_overflow, "exp(trace(Z H)) can overflow; rescale X or Z");

  std::complex<double> mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t i = 1; i <= samples; ++i) {
    const Eigen::MatrixXcd h = orbit_sample(x, rng);
    const std::complex<double> w = std::exp((z * h).trace());
    const std::complex<double> delta = w - mean;
    mean += delta / double(i);
    m2 += (std::conj(delta) * (w - mean)).real();
  }
  const double se = samples > 1 ? std::sqrt(m2 / (double(samples - 1) * double(samples))) : 0.0;
  return {mean, se};
}

std::vector<double> sample_corner_spectra(std::span<const double> x, int k, std::int64_t count,
                                          std::uint64_t seed, int threads) {
  require_spectrum(x, /*strict=*/false, "spectrum X");
  if (x.empty()) fail(errc::invalid_argument, "spectrum must be nonempty");
  if (k < 1 || k > int(x.size())) fail(errc::dimension_mismatch, "corner size out of range");
  if (count < 0) fail(errc::invalid_argument, "sample count must be >= 0");
  std::vector<double> out(std::size_t(count) * k);
  const std::int64_t nblocks = (count + kSampleBlock - 1) / kSampleBlock;
  const std::vector<double> spectrum(x.begin(), x.end());
  run_blocks(nblocks, threads, [&](std::int64_t b) {
    RandomStream rng(seed, std::uint64_t(b));
    const std::int64_t lo = b * kSampleBlock, hi = std::min(count, lo + kSampleBlock);
    for (std::int64_t i = lo; i < hi; ++i) {
      const Eigen::MatrixXcd h = orbit_sample(spectrum, rng);
      const std::vector<double> ev = hermitian_spectrum(corner(h, k));
      std::copy(ev.begin(), ev.end(), out.begin() + std::size_t(i) * k);
    }
  });
  return out;
}

std::vector<Pattern> sample_patterns(std::span<const double> x, std::int64_t count,
                                     std::uint64_t seed, int threads) {
  require_spectrum(x, /*strict=*/false, "spectrum X");
  if (x.size() < 2) fail(errc::invalid_argument, "pattern sampling needs N >= 2");
  if (count < 0) fail(errc::invalid_argument, "sample count must be >= 0");
  std::vector<Pattern> out(static_cast<std::size_t>(count));
  const std::int64_t nblocks = (count + kSampleBlock - 1) / kSampleBlock;
  const std::vector<double> spectrum(x.begin(), x.end());
  run_blocks(nblocks, threads, [&](std::int64_t b) {
    RandomStream rng(seed, std::uint64_t(b));
    const std::int64_t lo = b * kSampleBlock, hi = std::min(count, lo + kSampleBlock);
    for (std::int64_t i = lo; i < hi; ++i)
      out[std::size_t(i)] = gt_pattern_of(orbit_sample(spectrum, rng));
  });
  return out;
}

}  // namespace gtcorners
