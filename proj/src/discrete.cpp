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

#include "gtcorners/discrete.hpp"

#include <cmath>
#include <functional>

#include "gtcorners/density.hpp"
#include "gtcorners/errors.hpp"
#include "gtcorners/geometry.hpp"

namespace gtcorners {

namespace {

void require_signature(std::span<const long long> v, const char* what) {
  if (v.empty()) fail(errc::invalid_argument, std::string(what) + " must be nonempty");
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] > v[i])
      fail(errc::invalid_argument, std::string(what) + " must be weakly increasing");
}

// Dense m-dimensional table of exact counts over the lattice box [lo, hi]^m.
struct Box {
  long long lo = 0;
  std::size_t side = 1;
  int dims = 0;
  std::vector<mpz_class> cells;

  Box(long long lo_, long long hi_, int dims_, std::uint64_t budget) : lo(lo_), dims(dims_) {
    side = std::size_t(hi_ - lo_ + 1);
    std::uint64_t total = 1;
    for (int d = 0; d < dims; ++d) {
      if (total > budget / side)
        fail(errc::resource_limit, "counting table exceeds the configured memory budget");
      total *= side;
    }
    cells.assign(std::size_t(total), mpz_class(0));
  }

  std::size_t index(std::span<const long long> c) const {
    std::size_t idx = 0, stride = 1;
    for (int d = 0; d < dims; ++d) {
      idx += std::size_t(c[d] - lo) * stride;
      stride *= side;
    }
    return idx;
  }
};

// In-place prefix sums along every axis: cells[t] becomes sum over y <= t.
void prefix_sums(Box& box) {
  std::size_t stride = 1;
  for (int d = 0; d < box.dims; ++d) {
    for (std::size_t i = 0; i < box.cells.size(); ++i)
      if ((i / stride) % box.side != 0) box.cells[i] += box.cells[i - stride];
    stride *= box.side;
  }
}

// Sum of the original table over the box prod [l_d, u_d], read from the
// prefix-summed table by inclusion-exclusion.  Requires l_d <= u_d + 1.
// Axes with l_d == lo only ever contribute their upper corner (the lower one
// falls off the table), so the mask runs over the remaining axes alone.
void box_sum(const Box& prefixed, std::span<const long long> l, std::span<const long long> u,
             mpz_class& out) {
  out = 0;
  const int m = prefixed.dims;
  std::vector<int> active;
  active.reserve(m);
  for (int d = 0; d < m; ++d)
    if (l[d] > prefixed.lo) active.push_back(d);
  std::vector<long long> corner(u.begin(), u.end());
  for (unsigned mask = 0; mask < (1u << active.size()); ++mask) {
    for (std::size_t t = 0; t < active.size(); ++t)
      corner[active[t]] = (mask >> t & 1) ? l[active[t]] - 1 : u[active[t]];
    const mpz_class& term = prefixed.cells[prefixed.index(corner)];
    if (__builtin_popcount(mask) % 2 == 0)
      out += term;
    else
      out -= term;
  }
}

// Visits every weakly increasing tuple of the given length inside the box.
void for_each_monotone(long long lo, long long hi, int length,
                       const std::function<void(std::span<const long long>)>& visit) {
  std::vector<long long> tuple(length);
  const std::function<void(int, long long)> rec = [&](int pos, long long from) {
    if (pos == length) {
      visit(tuple);
      return;
    }
    for (long long v = from; v <= hi; ++v) {
      tuple[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, lo);
}

// Table for the row of length N-1 directly below X: indicator of interlacing.
Box top_row_table(std::span<const long long> x, std::uint64_t budget) {
  const int m = int(x.size()) - 1;
  Box box(x.front(), x.back(), m, budget);
  std::vector<long long> tuple(m);
  const std::function<void(int)> rec = [&](int pos) {
    if (pos == m) {
      box.cells[box.index(tuple)] = 1;
      return;
    }
    for (long long v = x[pos]; v <= x[pos + 1]; ++v) {
      tuple[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return box;
}

// One DP step: counts for rows of length m-1 from counts for rows of length m.
// Predecessor ranges per axis: y_1 in [lo, y'_1], y_d in [y'_{d-1}, y'_d],
// y_m in [y'_{m-1}, hi].
Box fold_row(Box upper, long long lo, long long hi, std::uint64_t budget) {
  const int m = upper.dims;
  prefix_sums(upper);
  Box lower(lo, hi, m - 1, budget);
  std::vector<long long> l(m), u(m);
  mpz_class mass;
  for_each_monotone(lo, hi, m - 1, [&](std::span<const long long> y) {
    for (int d = 0; d < m; ++d) {
      l[d] = d == 0 ? lo : y[d - 1];
      u[d] = d == m - 1 ? hi : y[d];
    }
    box_sum(upper, l, u, mass);
    lower.cells[lower.index(y)] = mass;
  });
  return lower;
}

// DP down to the row of the requested length; x must be non-constant-free,
// i.e. any weakly increasing signature works.
Box row_table(std::span<const long long> x, int row_length, const DiscreteOptions& options) {
  Box box = top_row_table(x, options.max_table_cells);
  while (box.dims > row_length)
    box = fold_row(std::move(box), x.front(), x.back(), options.max_table_cells);
  return box;
}

}  // namespace

BigCount count_schemes(std::span<const long long> x, const DiscreteOptions& options) {
  require_signature(x, "signature X");
  if (x.size() == 1) return 1;
  const Box row1 = row_table(x, 1, options);
  mpz_class total = 0;
  for (const mpz_class& v : row1.cells) total += v;
  return total;
}

BigCount count_between(std::span<const long long> x, std::span<const long long> y,
                       const DiscreteOptions& options) {
  require_signature(x, "signature X");
  require_signature(y, "signature Y");
  const int n = int(x.size()), k = int(y.size());
  if (k >= n) fail(errc::invalid_argument, "row length K must satisfy K < N");
  for (long long v : y)
    if (v < x.front() || v > x.back()) return 0;
  const Box row = row_table(x, k, options);
  return row.cells[row.index(y)];
}

mpq_class relative_dimension(std::span<const long long> x, std::span<const long long> y,
                             const DiscreteOptions& options) {
  const BigCount chains = count_between(x, y, options);
  if (chains == 0) return mpq_class(0);
  mpq_class value(chains * count_schemes(y, options), count_schemes(x, options));
  value.canonicalize();
  return value;
}

std::vector<std::pair<Signature, mpq_class>> relative_dimension_table(
    std::span<const long long> x, int k, const DiscreteOptions& options) {
  require_signature(x, "signature X");
  if (k < 1 || k >= int(x.size()))
    fail(errc::invalid_argument, "row length K must satisfy 1 <= K < N");
  const Box row = row_table(x, k, options);
  const BigCount total = count_schemes(x, options);
  std::vector<std::pair<Signature, mpq_class>> table;
  for_each_monotone(x.front(), x.back(), k, [&](std::span<const long long> y) {
    const mpz_class& chains = row.cells[row.index(y)];
    if (chains == 0) return;
    mpq_class mass(chains * count_schemes(y, options), total);
    mass.canonicalize();
    table.emplace_back(Signature(y.begin(), y.end()), std::move(mass));
  });
  return table;
}

std::vector<ScalingRow> scaling_limit_compare(std::span<const double> x, int k, long long l,
                                              const std::vector<std::vector<double>>& points,
                                              const DiscreteOptions& options) {
  require_spectrum(x, /*strict=*/true, "spectrum x");
  if (l < 1) fail(errc::invalid_argument, "scale L must be >= 1");
  const auto half_up = [](double v) { return (long long)std::floor(v + 0.5); };
  Signature x_l(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) x_l[i] = half_up(double(l) * x[i]);
  for (std::size_t i = 1; i < x_l.size(); ++i)
    if (x_l[i - 1] >= x_l[i])
      fail(errc::degenerate_spectrum,
           "rounded spectrum has collisions at this L; increase L");
  const CornerDensity density(std::vector<double>(x.begin(), x.end()), k);
  double scale = 1.0;
  for (int j = 0; j < k; ++j) scale *= double(l);
  std::vector<ScalingRow> report;
  report.reserve(points.size());
  for (const std::vector<double>& a : points) {
    if (int(a.size()) != k) fail(errc::dimension_mismatch, "evaluation point must have length K");
    Signature y(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) y[j] = half_up(double(l) * a[j]);
    const double discrete = scale * relative_dimension(x_l, y, options).get_d();
    const double continuous = density(a);
    report.push_back({a, discrete, continuous, std::abs(discrete - continuous)});
  }
  return report;
}

}  // namespace gtcorners
