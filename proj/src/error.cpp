// Copyright 2026 The gmean Authors
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

#include "gmean/error.hpp"

namespace gmean {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::NoRealRoots: return "no-real-roots";
    case ErrorCode::DegenerateIdentity: return "degenerate-identity";
    case ErrorCode::NoRealRoot: return "no-real-root";
    case ErrorCode::MixedRadicands: return "mixed-radicands";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::NonPositive: return "non-positive";
    case ErrorCode::NoConvergence: return "no-convergence";
    case ErrorCode::CrossCheckFailed: return "cross-check-failed";
    case ErrorCode::Overflow: return "overflow";
  }
  return "unknown";
}

}  // namespace gmean
