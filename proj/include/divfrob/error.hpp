// Copyright 2026 the divfrob authors
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
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divfrob {

enum class ErrorCode {
  // arithmetic
  ModulusMismatch,
  ModulusTooLarge,
  BothZero,
  ConstantTermZero,
  NotDivisibleByP,
  InexactDivision,
  // curve validation
  NotPrime,
  InvalidExponent,
  NNotCoprimeToP,
  DegreeTooSmall,
  BadDegreeResidue,
  DegreeDivisibleByP,
  LeadingCoeffNotUnit,
  NotSeparable,
  RootAtZero,
  NoShiftExists,
  // internal consistency
  LiftIdentityFailed,
  SingularMatrix,
  ChartMismatch,
  TruncationInsufficient,
  OracleMismatch,
  NotHyperelliptic,
  // front end
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// True for errors caused by an invalid curve rather than by a bug.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string hint = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& hint() const noexcept { return hint_; }

 private:
  ErrorCode code_;
  std::string hint_;
};

}  // namespace divfrob
