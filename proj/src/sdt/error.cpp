// Copyright 2026 The sdt Authors
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

#include "sdt/error.hpp"

namespace sdt {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kArgument: return "argument";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kConnectivity: return "connectivity";
    case ErrorCode::kRegularity: return "regularity";
    case ErrorCode::kInvariant: return "invariant";
    case ErrorCode::kInvariance: return "invariance";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kHypothesis: return "hypothesis";
    case ErrorCode::kTheoremViolation: return "theorem-violation";
    case ErrorCode::kScale: return "scale";
    case ErrorCode::kScope: return "scope";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kApplicability: return "applicability";
  }
  return "unknown";
}

}  // namespace sdt
