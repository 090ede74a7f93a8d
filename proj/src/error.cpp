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
#include "divfrob/error.hpp"

namespace divfrob {

std::string_view error_code_name(ErrorCode code)
{
  switch (code) {
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ConstantTermZero: return "ConstantTermZero";
    case ErrorCode::NotDivisibleByP: return "NotDivisibleByP";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::NNotCoprimeToP: return "NNotCoprimeToP";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::BadDegreeResidue: return "BadDegreeResidue";
    case ErrorCode::DegreeDivisibleByP: return "DegreeDivisibleByP";
    case ErrorCode::LeadingCoeffNotUnit: return "LeadingCoeffNotUnit";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::RootAtZero: return "RootAtZero";
    case ErrorCode::NoShiftExists: return "NoShiftExists";
    case ErrorCode::LiftIdentityFailed: return "LiftIdentityFailed";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ChartMismatch: return "ChartMismatch";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::NotHyperelliptic: return "NotHyperelliptic";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code)
{
  switch (code) {
    case ErrorCode::ModulusTooLarge:
    case ErrorCode::NotPrime:
    case ErrorCode::InvalidExponent:
    case ErrorCode::NNotCoprimeToP:
    case ErrorCode::DegreeTooSmall:
    case ErrorCode::BadDegreeResidue:
    case ErrorCode::DegreeDivisibleByP:
    case ErrorCode::LeadingCoeffNotUnit:
    case ErrorCode::NotSeparable:
    case ErrorCode::RootAtZero:
    case ErrorCode::NoShiftExists:
    case ErrorCode::NotHyperelliptic:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message, std::string hint)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      hint_(std::move(hint))
{
}

}  // namespace divfrob
