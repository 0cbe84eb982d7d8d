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

#include "gtcorners.h"

#include <Eigen/Dense>
#include <atomic>
#include <complex>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "gtcorners/density.hpp"
#include "gtcorners/discrete.hpp"
#include "gtcorners/errors.hpp"
#include "gtcorners/geometry.hpp"
#include "gtcorners/matrixmodel.hpp"
#include "gtcorners/splines.hpp"
#include "gtcorners/verify.hpp"

namespace {

thread_local std::string g_last_error;

gtc_status status_of(gtcorners::errc code) {
  using gtcorners::errc;
  switch (code) {
    case errc::invalid_argument: return GTC_ERROR_INVALID_ARGUMENT;
    case errc::dimension_mismatch: return GTC_ERROR_DIMENSION;
    case errc::degenerate_spectrum: return GTC_ERROR_DEGENERATE;
    case errc::conditioning: return GTC_ERROR_CONDITIONING;
    case errc::resource_limit: return GTC_ERROR_RESOURCE;
    case errc::range_overflow: return GTC_ERROR_RANGE;
  }
  return GTC_ERROR_INTERNAL;
}

template <typename Fn>
gtc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GTC_OK;
  } catch (const gtcorners::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GTC_ERROR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GTC_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return GTC_ERROR_INTERNAL;
  }
}

void require(bool ok, const char* message) {
  if (!ok) gtcorners::fail(gtcorners::errc::invalid_argument, message);
}

std::span<const double> as_span(const double* data, int64_t n, const char* what) {
  require(n >= 0, "negative array length");
  require(data != nullptr || n == 0, what);
  return {data, std::size_t(n)};
}

std::vector<long long> as_signature(const int64_t* data, int64_t n, const char* what) {
  require(n >= 0, "negative array length");
  require(data != nullptr || n == 0, what);
  return std::vector<long long>(data, data + n);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::complex<double>> as_complex(const double* re, const double* im, int64_t n,
                                             const char* what) {
  require(n >= 0, "negative array length");
  require(re != nullptr || n == 0, what);
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (int64_t i = 0; i < n; ++i) z[std::size_t(i)] = {re[i], im == nullptr ? 0.0 : im[i]};
  return z;
}

// distinct per-call sampling seeds from (base seed, call index)
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t v = seed + 0x9E3779B97F4A7C15ULL * (counter + 1);
  v = (v ^ (v >> 30)) * 0xBF58476D1CE4E5B9ULL;
  v = (v ^ (v >> 27)) * 0x94D049BB133111EBULL;
  return v ^ (v >> 31);
}

}  // namespace

struct gtc_density {
  gtcorners::CornerDensity impl;
};

struct gtc_sampler {
  std::vector<double> x;
  std::uint64_t seed;
  int threads;
  std::atomic<std::uint64_t> calls{0};
};

extern "C" {

const char* gtc_version(void) { return "1.0.0"; }

const char* gtc_last_error(void) { return g_last_error.c_str(); }

void gtc_string_free(char* s) { std::free(s); }

gtc_status gtc_spline_eval(const double* knots, int64_t n, double a, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = gtcorners::fundamental_spline(a, as_span(knots, n, "null knot array"));
  });
}

gtc_status gtc_bspline_eval(const double* knots, int64_t n, double a, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = gtcorners::b_spline(a, as_span(knots, n, "null knot array"));
  });
}

gtc_status gtc_spline_integrate(const double* knots, int64_t n, double lo, double hi,
                                double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = gtcorners::spline_tail_integral(lo, hi, as_span(knots, n, "null knot array"));
  });
}

gtc_status gtc_divided_difference(gtc_real_fn f, void* ctx, const double* points, int64_t n,
                                  double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(f != nullptr, "null callback");
    *out = gtcorners::divided_difference([f, ctx](double x) { return f(x, ctx); },
                                         as_span(points, n, "null point array"));
  });
}

gtc_status gtc_interlaces(const double* inner, int64_t inner_n, const double* outer,
                          int64_t outer_n, int* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = gtcorners::interlaces(as_span(inner, inner_n, "null inner array"),
                                 as_span(outer, outer_n, "null outer array"))
               ? 1
               : 0;
  });
}

gtc_status gtc_vandermonde(const double* x, int64_t n, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = gtcorners::vandermonde(as_span(x, n, "null array"));
  });
}

gtc_status gtc_density_create(const double* x, int64_t n, int k, gtc_density** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const std::span<const double> spectrum = as_span(x, n, "null spectrum");
    *out = new gtc_density{gtcorners::CornerDensity(
        std::vector<double>(spectrum.begin(), spectrum.end()), k)};
  });
}

void gtc_density_destroy(gtc_density* d) { delete d; }

gtc_status gtc_density_eval(const gtc_density* d, const double* a, int64_t k, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(d != nullptr, "null density handle");
    *out = d->impl(as_span(a, k, "null evaluation point"));
  });
}

gtc_status gtc_density_normalization(const gtc_density* d, int extra_points, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(d != nullptr, "null density handle");
    gtcorners::QuadratureSpec spec;
    if (extra_points > 0) spec.extra_points = extra_points;
    *out = d->impl.normalization(spec);
  });
}

gtc_status gtc_density_compose_eval(const gtc_density* d, const double* b, int64_t k_minus_1,
                                    double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(d != nullptr, "null density handle");
    *out = d->impl.compose_with_corner_kernel(as_span(b, k_minus_1, "null evaluation point"));
  });
}

gtc_status gtc_kernel_density(const double* x, int64_t n, const double* a, int64_t m,
                              double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = gtcorners::kernel_density(as_span(x, n, "null spectrum"),
                                     as_span(a, m, "null evaluation point"));
  });
}

gtc_status gtc_gt_volume(const double* x, int64_t n, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = gtcorners::gt_volume(as_span(x, n, "null spectrum"));
  });
}

gtc_status gtc_hciz(const double* x, int64_t n, const double* z_re, const double* z_im,
                    double* out_re, double* out_im) {
  return guarded([&] {
    require(out_re != nullptr && out_im != nullptr, "null output pointer");
    const std::complex<double> value = gtcorners::hciz(
        as_span(x, n, "null spectrum"), as_complex(z_re, z_im, n, "null z array"));
    *out_re = value.real();
    *out_im = value.imag();
  });
}

gtc_status gtc_sampler_create(const double* x, int64_t n, uint64_t seed, int threads,
                              gtc_sampler** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const std::span<const double> spectrum = as_span(x, n, "null spectrum");
    gtcorners::require_spectrum(spectrum, /*strict=*/false, "spectrum X");
    require(n >= 2, "sampler needs N >= 2");
    *out = new gtc_sampler{std::vector<double>(spectrum.begin(), spectrum.end()), seed,
                           threads, {}};
  });
}

void gtc_sampler_destroy(gtc_sampler* s) { delete s; }

gtc_status gtc_sampler_corner_spectra(gtc_sampler* s, int k, int64_t count, double* out) {
  return guarded([&] {
    require(s != nullptr, "null sampler handle");
    require(out != nullptr || count == 0, "null output pointer");
    const std::uint64_t call = s->calls.fetch_add(1);
    const std::vector<double> rows = gtcorners::sample_corner_spectra(
        s->x, k, count, mix_seed(s->seed, call), s->threads);
    std::memcpy(out, rows.data(), rows.size() * sizeof(double));
  });
}

gtc_status gtc_sampler_patterns(gtc_sampler* s, int64_t count, double* out) {
  return guarded([&] {
    require(s != nullptr, "null sampler handle");
    require(out != nullptr || count == 0, "null output pointer");
    const std::uint64_t call = s->calls.fetch_add(1);
    const std::vector<gtcorners::Pattern> patterns =
        gtcorners::sample_patterns(s->x, count, mix_seed(s->seed, call), s->threads);
    double* cursor = out;
    for (const gtcorners::Pattern& p : patterns)
      for (const std::vector<double>& row : p) {
        std::memcpy(cursor, row.data(), row.size() * sizeof(double));
        cursor += row.size();
      }
  });
}

gtc_status gtc_laplace_mc(const double* x, int64_t n, const double* z_re, const double* z_im,
                          int64_t samples, uint64_t seed, double* out_re, double* out_im,
                          double* out_se) {
  return guarded([&] {
    require(out_re != nullptr && out_im != nullptr && out_se != nullptr, "null output pointer");
    require(n >= 0, "negative array length");
    require(z_re != nullptr || n == 0, "null z array");
    Eigen::MatrixXcd z(n, n);
    for (int64_t i = 0; i < n; ++i)
      for (int64_t j = 0; j < n; ++j) {
        const int64_t idx = i * n + j;
        z(i, j) = {z_re[idx], z_im == nullptr ? 0.0 : z_im[idx]};
      }
    gtcorners::RandomStream rng(seed);
    const gtcorners::McEstimate estimate =
        gtcorners::laplace_mc(as_span(x, n, "null spectrum"), z, samples, rng);
    *out_re = estimate.value.real();
    *out_im = estimate.value.imag();
    *out_se = estimate.standard_error;
  });
}

gtc_status gtc_count_schemes(const int64_t* x, int64_t n, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = dup_string(gtcorners::count_schemes(as_signature(x, n, "null signature")).get_str());
  });
}

gtc_status gtc_count_between(const int64_t* x, int64_t n, const int64_t* y, int64_t k,
                             char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = dup_string(gtcorners::count_between(as_signature(x, n, "null signature"),
                                               as_signature(y, k, "null signature"))
                          .get_str());
  });
}

gtc_status gtc_relative_dimension(const int64_t* x, int64_t n, const int64_t* y, int64_t k,
                                  char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const mpq_class value = gtcorners::relative_dimension(as_signature(x, n, "null signature"),
                                                          as_signature(y, k, "null signature"));
    *out = dup_string(value.get_num().get_str() + "/" + value.get_den().get_str());
  });
}

gtc_status gtc_scaling_limit(const double* x, int64_t n, int k, int64_t l, const double* points,
                             int64_t count, double* out_discrete, double* out_density,
                             double* out_absdiff) {
  return guarded([&] {
    require(count >= 0, "negative point count");
    require(points != nullptr || count == 0, "null point array");
    require(k >= 1, "row length must be >= 1");
    std::vector<std::vector<double>> grid(static_cast<std::size_t>(count));
    for (int64_t i = 0; i < count; ++i)
      grid[std::size_t(i)] = std::vector<double>(points + i * k, points + (i + 1) * k);
    const std::vector<gtcorners::ScalingRow> rows =
        gtcorners::scaling_limit_compare(as_span(x, n, "null spectrum"), k, l, grid);
    for (int64_t i = 0; i < count; ++i) {
      if (out_discrete != nullptr) out_discrete[i] = rows[std::size_t(i)].discrete_value;
      if (out_density != nullptr) out_density[i] = rows[std::size_t(i)].density_value;
      if (out_absdiff != nullptr) out_absdiff[i] = rows[std::size_t(i)].abs_difference;
    }
  });
}

gtc_status gtc_verify_run(const char* suite, int max_n, uint64_t seed, int64_t samples,
                          int threads, char** out_json, int* out_all_pass) {
  return guarded([&] {
    require(suite != nullptr, "null suite name");
    gtcorners::VerifyOptions options;
    if (max_n > 0) {
      options.max_n = std::max(max_n, 2);
      options.discrete_max_n = std::min(max_n, 5);
    }
    if (seed != 0) options.seed = seed;
    if (samples > 0) options.samples = samples;
    options.threads = threads;
    const std::vector<gtcorners::CheckResult> results = gtcorners::verify_suite(suite, options);
    if (out_all_pass != nullptr) {
      int all = 1;
      for (const gtcorners::CheckResult& r : results) all = all && r.pass;
      *out_all_pass = all;
    }
    if (out_json != nullptr) *out_json = dup_string(gtcorners::report_json(results));
  });
}

}  // extern "C"
