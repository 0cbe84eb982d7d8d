/* Copyright 2026 The gtcorners Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the gtcorners library.
 *
 * Conventions:
 *   - Every fallible call returns a gtc_status; GTC_OK is 0.  On failure the
 *     thread-local message from gtc_last_error() describes the problem and
 *     output parameters are left untouched.
 *   - Spectra are passed as arrays sorted in increasing order (strictly
 *     increasing where the operation requires distinct eigenvalues).
 *   - Infinite bounds are expressed with +/- INFINITY from <math.h>.
 *   - Strings returned through char** are heap-allocated; release them with
 *     gtc_string_free (never with free from a different runtime).
 */

#ifndef GTCORNERS_H
#define GTCORNERS_H

#include <stdint.h>

#if defined(_WIN32)
#define GTC_API __declspec(dllexport)
#elif defined(__GNUC__)
#define GTC_API __attribute__((visibility("default")))
#else
#define GTC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gtc_status {
  GTC_OK = 0,
  GTC_ERROR_INVALID_ARGUMENT = 1, /* malformed input (NaN, bad sizes, order) */
  GTC_ERROR_DIMENSION = 2,        /* shapes of two arguments disagree */
  GTC_ERROR_DEGENERATE = 3,       /* repeated eigenvalues where distinct needed */
  GTC_ERROR_CONDITIONING = 4,     /* input too ill-conditioned to evaluate */
  GTC_ERROR_RESOURCE = 5,         /* configured work or memory budget exceeded */
  GTC_ERROR_RANGE = 6,            /* result or intermediate would overflow */
  GTC_ERROR_INTERNAL = 7          /* unexpected failure; please report */
} gtc_status;

/* Library version as "major.minor.patch". Static storage; do not free. */
GTC_API const char* gtc_version(void);

/* Message for the most recent failure on the calling thread ("" if none).
 * Static storage; valid until the next failing call on this thread. */
GTC_API const char* gtc_last_error(void);

/* Releases strings returned through char** out parameters. NULL is a no-op. */
GTC_API void gtc_string_free(char* s);

/* ---------------------------------------------------------------- splines */

/* Density-normalized spline with knots y[0] < ... < y[n-1] (unit total
 * integral), evaluated at a. */
GTC_API gtc_status gtc_spline_eval(const double* knots, int64_t n, double a, double* out);

/* Unit-peak-normalized variant (classical B-spline normalization). */
GTC_API gtc_status gtc_bspline_eval(const double* knots, int64_t n, double a, double* out);

/* Integral of the density-normalized spline over [lo, hi]; bounds may be
 * +/- INFINITY.  The total integral is exactly 1. */
GTC_API gtc_status gtc_spline_integrate(const double* knots, int64_t n, double lo, double hi,
                                        double* out);

/* Divided difference of a callback over strictly increasing points. */
typedef double (*gtc_real_fn)(double x, void* ctx);
GTC_API gtc_status gtc_divided_difference(gtc_real_fn f, void* ctx, const double* points,
                                          int64_t n, double* out);

/* --------------------------------------------------------------- geometry */

/* *out = 1 if inner (length n-1) interlaces outer (length n), else 0. */
GTC_API gtc_status gtc_interlaces(const double* inner, int64_t inner_n, const double* outer,
                                  int64_t outer_n, int* out);

/* Product of pairwise differences prod_{i<j} (x_j - x_i); 1 for n < 2. */
GTC_API gtc_status gtc_vandermonde(const double* x, int64_t n, double* out);

/* -------------------------------------------------------------- densities */

/* Joint density of the ordered spectrum of the K x K corner of a random
 * self-adjoint matrix with eigenvalues x[0] < ... < x[n-1]. */
typedef struct gtc_density gtc_density;

GTC_API gtc_status gtc_density_create(const double* x, int64_t n, int k, gtc_density** out);
GTC_API void gtc_density_destroy(gtc_density* d);

/* Density at the weakly increasing point a[0..k-1]; 0 outside the support. */
GTC_API gtc_status gtc_density_eval(const gtc_density* d, const double* a, int64_t k,
                                    double* out);

/* Total integral of the density (should be 1 up to quadrature error).
 * extra_points adds quadrature nodes per axis beyond the exactness minimum;
 * pass 0 for the default. */
GTC_API gtc_status gtc_density_normalization(const gtc_density* d, int extra_points, double* out);

/* Density of the (K-1)-row obtained by taking one more corner step, computed
 * by integrating this K-row density against the one-step transition kernel.
 * b has length k-1.  Requires k >= 2. */
GTC_API gtc_status gtc_density_compose_eval(const gtc_density* d, const double* b,
                                            int64_t k_minus_1, double* out);

/* One-step transition density from spectrum x (length n, strict) to the
 * spectrum a (length n-1) of its top (n-1) x (n-1) corner. */
GTC_API gtc_status gtc_kernel_density(const double* x, int64_t n, const double* a, int64_t m,
                                      double* out);

/* Euclidean volume of the polytope of triangular interlacing arrays with top
 * row x (length n, strict). */
GTC_API gtc_status gtc_gt_volume(const double* x, int64_t n, double* out);

/* Normalized spherical matrix integral: the average of exp(trace(Z U X U*))
 * over Haar-random unitary U, with X = diag(x) and Z any matrix with distinct
 * eigenvalues z (given split into real and imaginary parts, each length n). */
GTC_API gtc_status gtc_hciz(const double* x, int64_t n, const double* z_re, const double* z_im,
                            double* out_re, double* out_im);

/* --------------------------------------------------------------- sampling */

/* Deterministic sampler of random corners of the orbit of diag(x).  Each
 * draw call consumes a fresh deterministic batch: results depend only on
 * (x, seed, call index, per-call arguments), never on the thread count. */
typedef struct gtc_sampler gtc_sampler;

GTC_API gtc_status gtc_sampler_create(const double* x, int64_t n, uint64_t seed, int threads,
                                      gtc_sampler** out);
GTC_API void gtc_sampler_destroy(gtc_sampler* s);

/* count spectra of the K x K corner, written row-major into out[count * k]. */
GTC_API gtc_status gtc_sampler_corner_spectra(gtc_sampler* s, int k, int64_t count, double* out);

/* count full triangular arrays (corner spectra for K = n-1 down to 1), each
 * flattened row-major by descending row length into n*(n-1)/2 doubles. */
GTC_API gtc_status gtc_sampler_patterns(gtc_sampler* s, int64_t count, double* out);

/* Monte Carlo estimate of the average of exp(trace(Z H)) over random H with
 * spectrum x, with jackknife standard error.  z_re/z_im are n x n row-major. */
GTC_API gtc_status gtc_laplace_mc(const double* x, int64_t n, const double* z_re,
                                  const double* z_im, int64_t samples, uint64_t seed,
                                  double* out_re, double* out_im, double* out_se);

/* --------------------------------------------------------------- discrete */

/* Exact number of integer triangular arrays with top row x (weakly
 * increasing integers), as a decimal string. */
GTC_API gtc_status gtc_count_schemes(const int64_t* x, int64_t n, char** out);

/* Exact number of interlacing integer chains from top row x down to row y
 * (length k < n), as a decimal string. */
GTC_API gtc_status gtc_count_between(const int64_t* x, int64_t n, const int64_t* y, int64_t k,
                                     char** out);

/* Exact fraction of arrays under x whose row k equals y, as "p/q" in lowest
 * terms ("0" when no array passes through y). */
GTC_API gtc_status gtc_relative_dimension(const int64_t* x, int64_t n, const int64_t* y,
                                          int64_t k, char** out);

/* Rescaled discrete row-k mass L^k * P(row = round(L*a)) under top row
 * round(L*x), against the continuous density at a, for `count` points of
 * length k packed row-major.  Arrays out_* receive count entries each (any
 * may be NULL to skip). */
GTC_API gtc_status gtc_scaling_limit(const double* x, int64_t n, int k, int64_t l,
                                     const double* points, int64_t count, double* out_discrete,
                                     double* out_density, double* out_absdiff);

/* ----------------------------------------------------------- verification */

/* Runs a named self-verification suite: one of "splines", "kernel",
 * "theorem", "volume", "hciz", "recurrence", "discrete", "all".  max_n <= 0,
 * samples <= 0 select defaults.  On success *out_json (if non-NULL) receives
 * the JSON report and *out_all_pass (if non-NULL) is 1 when every check
 * passed.  A failed check is NOT an error status; inspect out_all_pass. */
GTC_API gtc_status gtc_verify_run(const char* suite, int max_n, uint64_t seed, int64_t samples,
                                  int threads, char** out_json, int* out_all_pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GTCORNERS_H */
