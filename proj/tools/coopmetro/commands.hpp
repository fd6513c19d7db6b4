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

#pragma once

#include <iosfwd>
#include <optional>

#include "config.hpp"

namespace coopmetro::cli {

enum ExitCode : int { kExitOk = 0, kExitPointFailures = 1, kExitUsage = 2, kExitFailure = 3 };

// Parses COOPMETRO_THREADS; unset or empty means 0 (library default).
unsigned threads_from_env(const char* value);

// Executes a validated config, writing results to `out` and diagnostics to `err`.
int execute(const RunConfig& config, unsigned threads, std::ostream& out, std::ostream& err);

// 1 / sqrt(m f_q); nullopt when f_q <= 0.
std::optional<double> report_bound(double f_q, int m);

}  // namespace coopmetro::cli
