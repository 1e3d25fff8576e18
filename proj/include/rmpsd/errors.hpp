// Copyright 2026 The rmpsd Authors
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

#ifndef RMPSD_ERRORS_HPP
#define RMPSD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rmpsd {

// Domain errors. The CLI prints the symbolic name on stderr, so names are
// part of the tool's machine-readable surface and must stay stable.
enum class ErrorCode {
  kNonPositiveValue,
  kDemandZero,
  kShapeMismatch,
  kUnrelatedValuations,
  kNotMonotone,
  kNotAPrefix,
  kPrefixDoesNotFit,
  kSoldItemPricedInfinite,
  kNoBuyerFits,
  kLimitExceeded,
  kInfeasible,
  kLambdaTooSmall,
  kInvalidCPInstance,
  kInvalidWitness,
  kParseError,
  kDivisionByZero,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rmpsd

#endif  // RMPSD_ERRORS_HPP
