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

#include <cstdint>
#include <map>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"

using namespace gtcorners;
using gtcorners::testing::thrown_code;

namespace {

// Independent oracle: memoized top-down recursion D(X) = sum over rows Y
// directly under X of D(Y), structured unlike the library's bottom-up
// prefix-sum tables.
class MemoCounter {
 public:
  std::int64_t count(const Signature& top) {
    if (top.size() <= 1) return 1;
    const auto hit = memo_.find(top);
    if (hit != memo_.end()) return hit->second;
    std::int64_t total = 0;
    Signature row(top.size() - 1);
    sum_children(top, row, 0, total);
    memo_.emplace(top, total);
    return total;
  }

  // number of interlacing chains from top down to a row equal to y
  std::int64_t chains_to(const Signature& top, const Signature& y) {
    if (y.size() >= top.size()) return 0;
    if (top.size() == y.size() + 1) return interlace(y, top) ? 1 : 0;
    std::int64_t total = 0;
    Signature row(top.size() - 1);
    chain_children(top, y, row, 0, total);
    return total;
  }

 private:
  static bool interlace(const Signature& inner, const Signature& outer) {
    for (std::size_t i = 0; i < inner.size(); ++i)
      if (inner[i] < outer[i] || inner[i] > outer[i + 1]) return false;
    return true;
  }

  void sum_children(const Signature& top, Signature& row, std::size_t pos, std::int64_t& total) {
    if (pos == row.size()) {
      total += count(row);
      return;
    }
    const long long lo = pos == 0 ? top[0] : std::max(top[pos], row[pos - 1]);
    for (long long v = lo; v <= top[pos + 1]; ++v) {
      row[pos] = v;
      sum_children(top, row, pos + 1, total);
    }
  }

  void chain_children(const Signature& top, const Signature& y, Signature& row, std::size_t pos,
                      std::int64_t& total) {
    if (pos == row.size()) {
      total += chains_to(row, y);
      return;
    }
    const long long lo = pos == 0 ? top[0] : std::max(top[pos], row[pos - 1]);
    for (long long v = lo; v <= top[pos + 1]; ++v) {
      row[pos] = v;
      chain_children(top, y, row, pos + 1, total);
    }
  }

  std::map<Signature, std::int64_t> memo_;
};

}  // namespace

TEST_CASE("array counts match hand values and representation dimensions") {
  CHECK(count_schemes(Signature{5}) == 1);
  CHECK(count_schemes(Signature{0, 1}) == 2);
  CHECK(count_schemes(Signature{0, 2}) == 3);
  CHECK(count_schemes(Signature{0, 0, 1}) == 3);
  CHECK(count_schemes(Signature{3, 3, 3}) == 1);
  // staircase rows have dimension 2^(n choose 2) (classical Weyl values)
  CHECK(count_schemes(Signature{0, 1, 2}) == 8);
  CHECK(count_schemes(Signature{0, 1, 2, 3}) == 64);
  CHECK(count_schemes(Signature{0, 1, 2, 3, 4}) == 1024);
}

TEST_CASE("array counts match a memoized recursion") {
  MemoCounter oracle;
  Signature x(3);
  for (long long a = 0; a <= 3; ++a)
    for (long long b = a; b <= 3; ++b)
      for (long long c = b; c <= 3; ++c) {
        x = {a, b, c};
        CHECK(count_schemes(x) == mpz_class(static_cast<long>(oracle.count(x))));
      }
  // a couple of larger spot checks
  CHECK(count_schemes(Signature{0, 2, 5, 9}) == mpz_class(static_cast<long>(oracle.count({0, 2, 5, 9}))));
  CHECK(count_schemes(Signature{-3, 0, 4, 4, 7}) == mpz_class(static_cast<long>(oracle.count({-3, 0, 4, 4, 7}))));
}

TEST_CASE("chain counts") {
  CHECK(count_between(Signature{0, 1, 2}, Signature{1}) == 4);
  CHECK(count_between(Signature{0, 1, 2}, Signature{3}) == 0);   // outside
  CHECK(count_between(Signature{0, 1, 2}, Signature{0, 2}) == 1);
  MemoCounter oracle;
  const Signature top = {0, 2, 4, 5};
  for (long long v = -1; v <= 6; ++v)
    CHECK(count_between(top, Signature{v}) == mpz_class(static_cast<long>(oracle.chains_to(top, {v}))));
  for (long long a = 0; a <= 5; ++a)
    for (long long b = a; b <= 5; ++b)
      CHECK(count_between(top, Signature{a, b}) == mpz_class(static_cast<long>(oracle.chains_to(top, {a, b}))));
  CHECK(thrown_code([] { count_between(Signature{0, 1}, Signature{0, 1}); }) ==
        errc::invalid_argument);
}

TEST_CASE("counts are invariant under shifting every entry") {
  const Signature x = {0, 2, 5, 9};
  const Signature y = {3, 6};
  for (const long long c : {-7LL, 4LL}) {
    Signature xs = x;
    Signature ys = y;
    for (long long& v : xs) v += c;
    for (long long& v : ys) v += c;
    CHECK(count_schemes(xs) == count_schemes(x));
    CHECK(count_between(xs, ys) == count_between(x, y));
    CHECK(relative_dimension(xs, ys) == relative_dimension(x, y));
  }
}

TEST_CASE("row mass is positive exactly on reachable rows") {
  MemoCounter oracle;
  const Signature x = {0, 2, 5};
  for (long long v = -1; v <= 6; ++v) {
    const Signature y = {v};
    CHECK((relative_dimension(x, y) > 0) == (oracle.chains_to(x, y) > 0));
  }
  for (long long a = -1; a <= 6; ++a)
    for (long long b = a; b <= 6; ++b) {
      const Signature y = {a, b};
      CHECK((relative_dimension(x, y) > 0) == (oracle.chains_to(x, y) > 0));
    }
}

TEST_CASE("relative dimensions are exact rationals") {
  CHECK(relative_dimension(Signature{0, 1}, Signature{0}) == mpq_class(1, 2));
  CHECK(relative_dimension(Signature{0, 1, 2}, Signature{1}) == mpq_class(1, 2));
  CHECK(relative_dimension(Signature{0, 1, 2}, Signature{5}) == 0);

  // masses sum to exactly 1 and match the memoized oracle
  MemoCounter oracle;
  const Signature x = {0, 1, 3};
  for (int k = 1; k <= 2; ++k) {
    mpq_class total(0);
    for (const auto& [y, mass] : relative_dimension_table(x, k)) {
      total += mass;
      mpq_class expected(mpz_class(static_cast<long>(oracle.chains_to(x, y) * oracle.count(y))),
                         mpz_class(static_cast<long>(oracle.count(x))));
      expected.canonicalize();
      CHECK(mass == expected);
    }
    CHECK(total == 1);
  }
}

TEST_CASE("scaling comparison") {
  const std::vector<double> x = {0, 0.25, 1};
  // L=2 turns the top row into (0, 1, 2) by half-up rounding of (0, 0.5, 2);
  // at a = 0.5 the row value rounds to 1 with exact mass 1/2, so the
  // rescaled discrete value is exactly L * 1/2 = 1.
  const std::vector<ScalingRow> rows = scaling_limit_compare(x, 1, 2, {{0.5}});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].discrete_value == doctest::Approx(1.0));
  CHECK(rows[0].abs_difference ==
        doctest::Approx(std::abs(rows[0].discrete_value - rows[0].density_value)));

  // rounding collisions are rejected with advice to raise L
  CHECK(thrown_code([] {
          scaling_limit_compare(std::vector<double>{0, 0.04, 1}, 1, 10, {{0.5}});
        }) == errc::degenerate_spectrum);
}

TEST_CASE("table budget") {
  DiscreteOptions tiny;
  tiny.max_table_cells = 4;
  CHECK(thrown_code([&] { count_schemes(Signature{0, 100}, tiny); }) == errc::resource_limit);
}
