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

#include "coopmetro/figures.hpp"

#include <fstream>
#include <locale>
#include <sstream>

#include "coopmetro/error.hpp"
#include "coopmetro/scenarios.hpp"
#include "coopmetro/sweep.hpp"

namespace coopmetro {
namespace {

constexpr double kSpontRate = 0.5;
constexpr double kDephRate = 0.5;

const SweepGrid kTimeGrid{SweepAxis::T, 0.05, 5.0, 100};
const SweepGrid kFieldGrid{SweepAxis::Bz, 0.5, 1.5, 201};

std::vector<double> values_or_throw(const std::vector<SweepPoint>& points, const char* what) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (!p.result) {
      fail(ErrorCode::NumericalFailure, std::string(what) + " failed at " +
                                            format_number(p.x) + ": " + p.diagnostic);
    }
    out.push_back(p.result->value);
  }
  return out;
}

// Columns t, f_coop, f_std_numeric, f_std_formula, f_heisenberg.
Table time_figure(const ScenarioSpec& coop, const ScenarioSpec& standard,
                  ScenarioKind formula_kind, double formula_rate, unsigned threads) {
  const std::vector<double> ts = kTimeGrid.values();
  const auto f_coop = values_or_throw(sweep(coop, 0.0, kTimeGrid, threads), "cooperative curve");
  const auto f_std = values_or_throw(sweep(standard, 0.0, kTimeGrid, threads), "standard curve");

  Table table;
  table.columns = {"t", "f_coop", "f_std_numeric", "f_std_formula", "f_heisenberg"};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double t = ts[i];
    table.rows.push_back({t, f_coop[i], f_std[i], standard_limit_formula(formula_kind, formula_rate, t),
                          heisenberg_limit(1, t)});
  }
  return table;
}

}  // namespace

const char* to_string(FigureId id) noexcept {
  switch (id) {
    case FigureId::Fig2: return "fig2";
    case FigureId::Fig3: return "fig3";
    case FigureId::Fig4: return "fig4";
    case FigureId::Fig5: return "fig5";
    case FigureId::FigA1: return "figA1";
  }
  return "unknown";
}

std::optional<FigureId> parse_figure_id(std::string_view name) noexcept {
  for (FigureId id : {FigureId::Fig2, FigureId::Fig3, FigureId::Fig4, FigureId::Fig5, FigureId::FigA1}) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

std::size_t Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  fail(ErrorCode::InvalidArgument, "table: no column " + std::string(name));
}

Table make_figure(FigureId id, unsigned threads) {
  switch (id) {
    case FigureId::Fig2: {
      const ScenarioSpec coop{.kind = ScenarioKind::CoopSpont, .b_z = 0.1, .b_x = 0.1, .gamma = kSpontRate};
      const ScenarioSpec standard{.kind = ScenarioKind::StdSpont, .b_z = 0.1, .gamma = kSpontRate};
      return time_figure(coop, standard, ScenarioKind::StdSpont, kSpontRate, threads);
    }
    case FigureId::Fig3: {
      const ScenarioSpec coop{.kind = ScenarioKind::CoopDeph, .b_z = 0.1, .b_x = 0.1, .eta = kDephRate};
      const ScenarioSpec standard{.kind = ScenarioKind::StdDeph, .b_z = 0.1, .eta = kDephRate};
      return time_figure(coop, standard, ScenarioKind::StdDeph, kDephRate, threads);
    }
    case FigureId::Fig4: {
      const ScenarioSpec coop{.kind = ScenarioKind::CoopThermal, .b_z = 0.3, .b_x = 0.1, .dipole = 2.0, .t_e = 0.0};
      // Without the transverse control the decay rate still follows the
      // field through the gap, but the jump operators do not.
      ScenarioSpec standard = coop;
      standard.b_x = 0.0;
      const double rate = thermal_rates(standard.b_z, 0.0, standard.dipole, standard.t_e).down();
      return time_figure(coop, standard, ScenarioKind::StdSpont, rate, threads);
    }
    case FigureId::Fig5: {
      const ScenarioSpec coop{.kind = ScenarioKind::TwoSpinCoop, .b_z = 1.0, .b_x = 0.1, .dipole = 10.0};
      const double t = 1.0;
      const auto f = values_or_throw(sweep(coop, t, kFieldGrid, threads), "two-spin curve");
      const std::vector<double> bz = kFieldGrid.values();
      Table table;
      table.columns = {"b_z", "f_coop", "f_heisenberg"};
      for (std::size_t i = 0; i < bz.size(); ++i) table.rows.push_back({bz[i], f[i], heisenberg_limit(2, t)});
      return table;
    }
    case FigureId::FigA1: {
      const ScenarioSpec spec{.kind = ScenarioKind::TwoSpinCoop, .b_z = 1.0, .b_x = 0.1};
      const auto exact = values_or_throw(
          sweep(make_objective(spec, Objective::GroundExact, SweepAxis::Bz, 0.0), kFieldGrid, threads),
          "exact ground state");
      const std::vector<double> bz = kFieldGrid.values();
      Table table;
      table.columns = {"b_z", "f_ground_exact", "f_ground_effective"};
      for (std::size_t i = 0; i < bz.size(); ++i) {
        table.rows.push_back({bz[i], exact[i], effective_two_spin_ground_qfi(bz[i], spec.b_x)});
      }
      return table;
    }
  }
  fail(ErrorCode::InvalidArgument, "figure: unknown id");
}

std::string format_number(double value) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(12);
  os << value;
  return os.str();
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

void write_csv_file(const std::string& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot open " + path + " for writing");
  write_csv(out, table);
  out.flush();
  if (!out) fail(ErrorCode::Io, "write failed for " + path);
}

}  // namespace coopmetro
