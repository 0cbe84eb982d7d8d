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

#ifndef GTCORNERS_TESTS_HELPERS_HPP
#define GTCORNERS_TESTS_HELPERS_HPP

#include <optional>
#include <utility>

#include "gtcorners/errors.hpp"

namespace gtcorners::testing {

// error code thrown by fn, or nullopt if it returned normally
template <typename Fn>
std::optional<errc> thrown_code(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace gtcorners::testing

#endif  // GTCORNERS_TESTS_HELPERS_HPP
