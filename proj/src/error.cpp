// Copyright 2026 The credal-decide Authors.
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

#include "credal/error.hpp"

namespace credal {

const char* ErrorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kDimension:
      return "dimension";
    case ErrorCode::kConditioningUndefined:
      return "conditioning_undefined";
    case ErrorCode::kUnsupported:
      return "unsupported";
    case ErrorCode::kSizeCap:
      return "size_cap";
    case ErrorCode::kNumeric:
      return "numeric";
  }
  return "unknown";
}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace credal
