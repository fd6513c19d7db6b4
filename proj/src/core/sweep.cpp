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

#include "coopmetro/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <memory>
#include <thread>
#include <utility>

#include "coopmetro/error.hpp"

namespace coopmetro {
namespace {

constexpr double kInvGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void set_parameter(ScenarioSpec& spec, SweepAxis axis, double value, double& t) {
  switch (axis) {
    case SweepAxis::Bz: spec.b_z = value; break;
    case SweepAxis::Bx: spec.b_x = value; break;
    case SweepAxis::T: t = value; break;
  }
}

double bisect(const std::function<double(double)>& f, double threshold, double below,
              double above, double tolerance) {
  while (std::abs(above - below) > tolerance) {
    const double mid = 0.5 * (below + above);
    if (f(mid) >= threshold) {
      above = mid;
    } else {
      below = mid;
    }
  }
  return 0.5 * (below + above);
}

class GuardedObjective {
 public:
  explicit GuardedObjective(const std::function<double(const std::vector<double>&)>& f)
      : f_(f) {}

  double operator()(const std::vector<double>& x) {
    ++evaluations;
    try {
      const double v = f_(x);
      return std::isnan(v) ? kNegInf : v;
    } catch (const std::exception&) {
      return kNegInf;
    }
  }

  int evaluations = 0;

 private:
  const std::function<double(const std::vector<double>&)>& f_;
};

std::vector<double> clamp_to(std::vector<double> x, const std::vector<Bounds>& bounds) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], bounds[i].lower, bounds[i].upper);
  return x;
}

std::pair<std::vector<double>, double> golden_section(GuardedObjective& f, double a, double b,
                                                      double tolerance) {
  double c = b - kInvGolden * (b - a);
  double d = a + kInvGolden * (b - a);
  double fc = f({c});
  double fd = f({d});
  while (b - a > tolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvGolden * (b - a);
      fc = f({c});
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvGolden * (b - a);
      fd = f({d});
    }
  }
  // The maximiser may sit on an edge of the bracket (monotone objectives).
  std::vector<std::pair<double, double>> candidates = {
      {c, fc}, {d, fd}, {a, f({a})}, {b, f({b})}};
  const auto best = std::max_element(candidates.begin(), candidates.end(),
                                     [](const auto& l, const auto& r) { return l.second < r.second; });
  return {{best->first}, best->second};
}

std::pair<std::vector<double>, double> nelder_mead(GuardedObjective& f,
                                                   const std::vector<double>& start,
                                                   const std::vector<double>& steps,
                                                   const std::vector<Bounds>& bounds,
                                                   const MaximizeOptions& options) {
  struct Vertex {
    std::vector<double> x;
    double value;
  };
  auto make = [&](std::vector<double> x) {
    x = clamp_to(std::move(x), bounds);
    const double v = f(x);
    return Vertex{std::move(x), v};
  };

  std::vector<Vertex> simplex;
  simplex.push_back(make(start));
  for (std::size_t i = 0; i < start.size(); ++i) {
    std::vector<double> x = start;
    x[i] += (x[i] + steps[i] <= bounds[i].upper) ? steps[i] : -steps[i];
    simplex.push_back(make(x));
  }

  // Maximisation: keep the best vertex first.
  auto by_value = [](const Vertex& l, const Vertex& r) { return l.value > r.value; };
  const std::size_t n = start.size();
  for (int it = 0; it < options.max_iterations; ++it) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    double size = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < n; ++i) size = std::max(size, std::abs(simplex[k].x[i] - simplex[0].x[i]));
    }
    if (size < options.tolerance) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k].x[i] / static_cast<double>(n);
    }
    auto along = [&](double coeff) {
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = centroid[i] + coeff * (simplex[n].x[i] - centroid[i]);
      return make(std::move(x));
    };

    Vertex reflected = along(-1.0);
    if (reflected.value > simplex[0].value) {
      Vertex expanded = along(-2.0);
      simplex[n] = expanded.value > reflected.value ? std::move(expanded) : std::move(reflected);
    } else if (reflected.value > simplex[n - 1].value) {
      simplex[n] = std::move(reflected);
    } else {
      Vertex contracted = reflected.value > simplex[n].value ? along(-0.5) : along(0.5);
      if (contracted.value > std::max(simplex[n].value, reflected.value)) {
        simplex[n] = std::move(contracted);
      } else {
        for (std::size_t k = 1; k <= n; ++k) {
          std::vector<double> x(n);
          for (std::size_t i = 0; i < n; ++i) x[i] = 0.5 * (simplex[0].x[i] + simplex[k].x[i]);
          simplex[k] = make(std::move(x));
        }
      }
    }
  }
  std::stable_sort(simplex.begin(), simplex.end(), by_value);
  return {simplex[0].x, simplex[0].value};
}

}  // namespace

const char* to_string(SweepAxis axis) noexcept {
  switch (axis) {
    case SweepAxis::Bz: return "b_z";
    case SweepAxis::Bx: return "b_x";
    case SweepAxis::T: return "t";
  }
  return "unknown";
}

std::optional<SweepAxis> parse_sweep_axis(std::string_view name) noexcept {
  if (name == "b_z") return SweepAxis::Bz;
  if (name == "b_x") return SweepAxis::Bx;
  if (name == "t") return SweepAxis::T;
  return std::nullopt;
}

const char* to_string(Objective objective) noexcept {
  switch (objective) {
    case Objective::Dynamics: return "dynamics";
    case Objective::GroundSingle: return "ground-single";
    case Objective::GroundExact: return "ground-exact";
    case Objective::GroundEffective: return "ground-effective";
  }
  return "unknown";
}

std::optional<Objective> parse_objective(std::string_view name) noexcept {
  for (Objective o : {Objective::Dynamics, Objective::GroundSingle, Objective::GroundExact,
                      Objective::GroundEffective}) {
    if (name == to_string(o)) return o;
  }
  return std::nullopt;
}

void SweepGrid::validate() const {
  if (!std::isfinite(from) || !std::isfinite(to) || !(from < to)) {
    fail(ErrorCode::InvalidArgument, "sweep grid: requires finite from < to");
  }
  if (points < 2) fail(ErrorCode::InvalidArgument, "sweep grid: requires points >= 2");
}

double SweepGrid::value(int i) const {
  if (i == points - 1) return to;
  return from + (to - from) * static_cast<double>(i) / static_cast<double>(points - 1);
}

std::vector<double> SweepGrid::values() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = value(i);
  return out;
}

ScalarObjective make_objective(const ScenarioSpec& spec, Objective objective, SweepAxis axis,
                               double t) {
  switch (objective) {
    case Objective::Dynamics:
      if (axis == SweepAxis::T) {
        // One pipeline serves every time point.
        auto pipeline = std::make_shared<const ScenarioPipeline>(spec);
        return [pipeline](double x) { return pipeline->qfi(x); };
      }
      return [spec, axis, t](double x) {
        ScenarioSpec s = spec;
        double time = t;
        set_parameter(s, axis, x, time);
        return qfi_at(s, time);
      };
    case Objective::GroundSingle:
    case Objective::GroundExact:
    case Objective::GroundEffective:
      return [spec, objective, axis](double x) {
        ScenarioSpec s = spec;
        double unused = 0.0;
        set_parameter(s, axis, x, unused);
        QfiResult r;
        r.method = QfiMethod::Pure;
        if (objective == Objective::GroundEffective) {
          r.value = effective_two_spin_ground_qfi(s.b_z, s.b_x);
          return r;
        }
        r.value = objective == Objective::GroundSingle ? single_spin_ground_qfi(s.b_z, s.b_x)
                                                       : exact_two_spin_ground_qfi(s.b_z, s.b_x);
        r.fd_step = default_fd_step(s.b_z);
        return r;
      };
  }
  fail(ErrorCode::InvalidArgument, "objective: unknown kind");
}

std::vector<SweepPoint> sweep(const ScalarObjective& f, const SweepGrid& grid, unsigned threads) {
  const std::vector<double> xs = grid.values();
  std::vector<SweepPoint> out(xs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < xs.size(); i = next++) {
      SweepPoint& p = out[i];
      p.x = xs[i];
      try {
        p.result = f(xs[i]);
      } catch (const std::exception& e) {
        p.diagnostic = e.what();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(xs.size()));
  if (threads <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

std::vector<SweepPoint> sweep(const ScenarioSpec& spec, double t, const SweepGrid& grid,
                              unsigned threads) {
  grid.validate();
  ScalarObjective f;
  try {
    f = make_objective(spec, Objective::Dynamics, grid.axis, t);
  } catch (const std::exception& e) {
    // A spec that is invalid at its nominal point still gets per-point results.
    const std::string why = e.what();
    f = [why](double) -> QfiResult { throw Error(ErrorCode::InvalidScenario, why); };
  }
  return sweep(f, grid, threads);
}

RegionResult find_region(const std::function<double(double)>& f, double threshold,
                         double lower, double upper, const RegionOptions& options) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper)) {
    fail(ErrorCode::InvalidArgument, "find_region: bracket must satisfy lower < upper");
  }
  if (!(threshold > 0.0)) fail(ErrorCode::InvalidArgument, "find_region: threshold must be > 0");
  if (options.prescan_points < 2 || !(options.tolerance > 0.0)) {
    fail(ErrorCode::InvalidArgument, "find_region: invalid options");
  }

  const SweepGrid grid{SweepAxis::Bz, lower, upper, options.prescan_points};
  const std::vector<double> xs = grid.values();
  std::vector<double> fs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) fs[i] = f(xs[i]);

  RegionResult r;
  r.threshold = threshold;
  const auto peak = static_cast<std::size_t>(std::max_element(fs.begin(), fs.end()) - fs.begin());
  if (!(fs[peak] >= threshold)) return r;

  std::size_t left = peak;
  while (left > 0 && fs[left - 1] >= threshold) --left;
  std::size_t right = peak;
  while (right + 1 < xs.size() && fs[right + 1] >= threshold) ++right;

  r.lower = left == 0 ? lower : bisect(f, threshold, xs[left - 1], xs[left], options.tolerance);
  r.upper = right + 1 == xs.size()
                ? upper
                : bisect(f, threshold, xs[right + 1], xs[right], options.tolerance);
  r.resolved = true;
  return r;
}

MaximizeResult maximize(const std::function<double(const std::vector<double>&)>& f,
                        const std::vector<Bounds>& bounds, const MaximizeOptions& options) {
  const std::size_t n = bounds.size();
  if (n != 1 && n != 2) fail(ErrorCode::InvalidArgument, "maximize: 1 or 2 free parameters");
  for (const auto& b : bounds) {
    if (!std::isfinite(b.lower) || !std::isfinite(b.upper) || !(b.lower < b.upper)) {
      fail(ErrorCode::InvalidArgument, "maximize: bounds must be finite with lower < upper");
    }
  }
  if (options.grid_points < 3) fail(ErrorCode::InvalidArgument, "maximize: grid_points >= 3");

  GuardedObjective g(f);
  const int m = options.grid_points;
  std::vector<double> spacing(n);
  for (std::size_t i = 0; i < n; ++i) spacing[i] = (bounds[i].upper - bounds[i].lower) / (m - 1);
  auto node = [&](std::size_t axis, int k) {
    return k == m - 1 ? bounds[axis].upper : bounds[axis].lower + spacing[axis] * k;
  };

  std::vector<int> best_index(n, 0);
  double best = kNegInf;
  const int outer = n == 2 ? m : 1;
  for (int j = 0; j < outer; ++j) {
    for (int i = 0; i < m; ++i) {
      std::vector<double> x = {node(0, i)};
      if (n == 2) x.push_back(node(1, j));
      const double v = g(x);
      if (v > best) {
        best = v;
        best_index = n == 2 ? std::vector<int>{i, j} : std::vector<int>{i};
      }
    }
  }
  if (best == kNegInf) {
    fail(ErrorCode::NumericalFailure, "maximize: objective failed on every grid point");
  }

  std::vector<double> coarse_x(n);
  for (std::size_t i = 0; i < n; ++i) coarse_x[i] = node(i, best_index[i]);

  std::pair<std::vector<double>, double> refined;
  if (n == 1) {
    const double a = node(0, std::max(0, best_index[0] - 1));
    const double b = node(0, std::min(m - 1, best_index[0] + 1));
    refined = golden_section(g, a, b, options.tolerance);
  } else {
    refined = nelder_mead(g, coarse_x, spacing, bounds, options);
  }

  MaximizeResult out;
  out.coarse_value = best;
  if (refined.second >= best) {
    out.argmax = std::move(refined.first);
    out.value = refined.second;
  } else {
    out.argmax = coarse_x;
    out.value = best;
  }
  out.evaluations = g.evaluations;
  return out;
}

MaximizeResult maximize_qfi(const ScenarioSpec& spec, Objective objective, double t,
                            const std::vector<SweepAxis>& free, const std::vector<Bounds>& bounds,
                            const MaximizeOptions& options) {
  if (free.empty() || free.size() > 2 || free.size() != bounds.size()) {
    fail(ErrorCode::InvalidArgument, "maximize_qfi: 1 or 2 free parameters with matching bounds");
  }
  if (free.size() == 2 && free[0] == free[1]) {
    fail(ErrorCode::InvalidArgument, "maximize_qfi: free parameters must differ");
  }
  auto f = [&](const std::vector<double>& x) {
    ScenarioSpec s = spec;
    double time = t;
    for (std::size_t i = 0; i < free.size(); ++i) set_parameter(s, free[i], x[i], time);
    if (objective == Objective::Dynamics) return qfi_at(s, time).value;
    return make_objective(s, objective, SweepAxis::Bz, time)(s.b_z).value;
  };
  return maximize(f, bounds, options);
}

}  // namespace coopmetro
