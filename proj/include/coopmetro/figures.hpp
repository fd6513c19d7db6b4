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
#include <string>
#include <string_view>
#include <vector>

namespace coopmetro {

enum class FigureId { Fig2, Fig3, Fig4, Fig5, FigA1 };

const char* to_string(FigureId id) noexcept;
std::optional<FigureId> parse_figure_id(std::string_view name) noexcept;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws InvalidArgument when absent.
  std::size_t column(std::string_view name) const;
};

/// Data behind one figure on its fixed grid:
///   fig2..fig4: t in [0.05, 5] step 0.05 -> t, f_coop, f_std_numeric, f_std_formula, f_heisenberg
///   fig5:       b_z in [0.5, 1.5] step 0.005 -> b_z, f_coop, f_heisenberg
///   figA1:      b_z in [0.5, 1.5] step 0.005 -> b_z, f_ground_exact, f_ground_effective
Table make_figure(FigureId id, unsigned threads = 0);

/// Header row then one row per line, values with 12 significant digits.
void write_csv(std::ostream& out, const Table& table);
void write_csv_file(const std::string& path, const Table& table);

/// printf("%.12g") independent of the global locale.
std::string format_number(double value);

}  // namespace coopmetro
