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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coopmetro/qfi.hpp"
#include "coopmetro/scenarios.hpp"

namespace coopmetro {

enum class SweepAxis { Bz, Bx, T };

const char* to_string(SweepAxis axis) noexcept;
std::optional<SweepAxis> parse_sweep_axis(std::string_view name) noexcept;

/// Inclusive linear grid from..to with `points` >= 2 values.
struct SweepGrid {
  SweepAxis axis = SweepAxis::T;
  double from = 0.0;
  double to = 1.0;
  int points = 2;

  void validate() const;
  double value(int i) const;
  std::vector<double> values() const;
};

/// What is being maximised or scanned as a function of one parameter.
enum class Objective {
  Dynamics,         // qfi_at of the scenario at time t
  GroundSingle,     // ground state of B_z sigma_z + B_x sigma_x
  GroundExact,      // ground state of the full two-spin Hamiltonian
  GroundEffective,  // two-level effective model closed form
};

const char* to_string(Objective objective) noexcept;
std::optional<Objective> parse_objective(std::string_view name) noexcept;

using ScalarObjective = std::function<QfiResult(double)>;

/// Objective as a function of one scenario parameter. `t` is the evolution time
/// unless the axis itself is time; ground-state objectives ignore it.
ScalarObjective make_objective(const ScenarioSpec& spec, Objective objective, SweepAxis axis,
                               double t);

struct SweepPoint {
  double x = 0.0;
  std::optional<QfiResult> result;
  std::string diagnostic;  // set when result is empty
};

/// Evaluates `f` at every grid value, concurrently on up to `threads` workers
/// (0 selects the hardware concurrency). Output order follows the grid;
/// evaluation failures are recorded per point.
std::vector<SweepPoint> sweep(const ScalarObjective& f, const SweepGrid& grid, unsigned threads = 0);

/// Dynamics sweep of a scenario; `t` is ignored when the grid runs over time.
std::vector<SweepPoint> sweep(const ScenarioSpec& spec, double t, const SweepGrid& grid,
                              unsigned threads = 0);

struct RegionResult {
  double lower = 0.0;
  double upper = 0.0;
  double threshold = 0.0;
  bool resolved = false;

  double width() const noexcept { return resolved ? upper - lower : 0.0; }
};

struct RegionOptions {
  double tolerance = 1e-4;
  int prescan_points = 101;
};

/// Interval around the best pre-scan point of `bracket` on which f >= threshold.
/// Endpoints are refined by bisection; an endpoint that never crosses inside
/// the bracket is pinned to the bracket edge.
RegionResult find_region(const std::function<double(double)>& f, double threshold,
                         double lower, double upper, const RegionOptions& options = {});

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct MaximizeResult {
  std::vector<double> argmax;
  double value = 0.0;
  double coarse_value = 0.0;
  int evaluations = 0;
};

struct MaximizeOptions {
  int grid_points = 33;
  double tolerance = 1e-6;
  int max_iterations = 2000;
};

/// Coarse grid scan followed by golden-section (one parameter) or Nelder-Mead
/// (two parameters) refinement inside the bounds. Points where `f` throws
/// count as -infinity.
MaximizeResult maximize(const std::function<double(const std::vector<double>&)>& f,
                        const std::vector<Bounds>& bounds, const MaximizeOptions& options = {});

/// Maximise an objective over one or two scenario parameters.
MaximizeResult maximize_qfi(const ScenarioSpec& spec, Objective objective, double t,
                            const std::vector<SweepAxis>& free, const std::vector<Bounds>& bounds,
                            const MaximizeOptions& options = {});

}  // namespace coopmetro
