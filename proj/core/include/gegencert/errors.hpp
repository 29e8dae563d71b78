// Copyright 2026 The gegencert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GEGENCERT_ERRORS_HPP_
#define GEGENCERT_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gegencert {

enum class ErrorKind {
  kNonSquarefree,
  kDivisionByZeroInterval,
  kBoundViolated,
  kDegenerateAngle,
  kBranchGap,
  kConvexityPremiseFailed,
  kInvariantViolation,
  kHypothesisViolated,
  kAlphaOutOfRange,
  kConvexityLost,
  kInconclusive,
};

std::string_view to_string(ErrorKind kind);

// Every certification failure that is not a plain "false" verdict surfaces as
// this exception; `kind()` lets sweeps record it per cell and continue.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gegencert

#endif  // GEGENCERT_ERRORS_HPP_
