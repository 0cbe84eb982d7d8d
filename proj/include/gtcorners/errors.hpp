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

#ifndef GTCORNERS_ERRORS_HPP
#define GTCORNERS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gtcorners {

/// Failure categories surfaced across the library.  The C API maps these
/// one-to-one onto status codes, the CLI onto exit codes.
enum class errc {
  invalid_argument = 1,  ///< malformed value (non-monotone knots, bad K, ...)
  dimension_mismatch,    ///< container sizes inconsistent with each other
  degenerate_spectrum,   ///< coincident entries where distinct ones are required
  conditioning,          ///< input inside the domain but too ill-conditioned
  resource_limit,        ///< configured work/memory budget exceeded
  range_overflow,        ///< result not representable in double precision
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gtcorners

#endif  // GTCORNERS_ERRORS_HPP
