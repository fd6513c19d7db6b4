// Copyright 2026 The coopmetro Authors
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

#include "coopmetro/error.hpp"

namespace coopmetro {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::InvalidOperator: return "invalid operator";
    case ErrorCode::InvalidModel: return "invalid model";
    case ErrorCode::InvalidScenario: return "invalid scenario";
    case ErrorCode::Dimension: return "dimension mismatch";
    case ErrorCode::NumericalFailure: return "numerical failure";
    case ErrorCode::OutOfRegime: return "out of regime";
    case ErrorCode::Degenerate: return "degenerate spectrum";
    case ErrorCode::Io: return "i/o error";
  }
  return "unknown error";
}

}  // namespace coopmetro
