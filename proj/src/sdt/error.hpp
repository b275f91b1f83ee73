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

#ifndef SDT_ERROR_HPP_
#define SDT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sdt {

// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
  kArgument = 1,
  kParse,
  kConnectivity,
  kRegularity,
  kInvariant,
  kInvariance,     // a point set is not closed under a generator
  kPrecondition,
  kHypothesis,
  kTheoremViolation,
  kScale,
  kScope,
  kNotFound,
  kIo,
  kApplicability,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sdt

#endif  // SDT_ERROR_HPP_
