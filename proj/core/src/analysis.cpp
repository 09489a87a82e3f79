// Copyright 2026 The spinsq Authors
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

#include "spinsq/analysis.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace spinsq {

const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::Eqs2:
      return "eqs2";
    case Criterion::Eq1:
      return "eq1";
    case Criterion::Case2:
      return "case2";
    case Criterion::Ppt:
      return "ppt";
    case Criterion::Ccnr:
      return "ccnr";
  }
  throw std::invalid_argument("invalid criterion");
}

std::optional<Criterion> criterion_from_name(std::string_view name) {
  for (Criterion c : kAllCriteria) {
    if (name == criterion_name(c)) {
      return c;
    }
  }
  return std::nullopt;
}

BracketExceeded::BracketExceeded(const ModelSpec& model, Criterion criterion,
                                 double t_max)
    : std::runtime_error(std::string(criterion_name(criterion)) +
                         " still detects " + model.describe() + " at t_max=" +
                         std::to_string(t_max) + "; raise the search range"),
      t_max_(t_max) {}

namespace {

void validate_params(const SearchParams& params) {
  if (!(params.t_min > 0.0) || !(params.t_max > params.t_min) ||
      !std::isfinite(params.t_max)) {
    throw std::invalid_argument("search range must satisfy 0 < t_min < t_max");
  }
  if (params.grid_points < 2) {
    throw std::invalid_argument("grid needs at least 2 points");
  }
  if (!(params.tol > 0.0)) {
    throw std::invalid_argument("bisection tolerance must be positive");
  }
}

double grid_point(const SearchParams& params, int i) {
  if (i == params.grid_points - 1) {
    return params.t_max;
  }
  const double log_lo = std::log(params.t_min);
  const double log_hi = std::log(params.t_max);
  return std::exp(log_lo + (log_hi - log_lo) * i / (params.grid_points - 1));
}

}  // namespace

double detection_margin(const ThermalSolver& solver, double t,
                        Criterion criterion) {
  switch (criterion) {
    case Criterion::Eqs2:
      return eval_squeezing_inequalities(solver.moments_at(t)).max_margin;
    case Criterion::Eq1: {
      auto margin = eval_standard_squeezing(solver.moments_at(t));
      return margin ? *margin : -std::numeric_limits<double>::infinity();
    }
    case Criterion::Case2:
      return eval_dicke_criterion(solver.moments_at(t));
    case Criterion::Ppt:
      return -ppt_all(solver.state_at(t)).min_pt_eigenvalue;
    case Criterion::Ccnr:
      return ccnr_all(solver.state_at(t)).max_ccnr_margin;
  }
  throw std::invalid_argument("invalid criterion");
}

double detection_margin(const ModelSpec& model, double t, Criterion criterion) {
  return detection_margin(ThermalSolver(model), t, criterion);
}

bool detects(const ThermalSolver& solver, double t, Criterion criterion) {
  switch (criterion) {
    case Criterion::Ppt:
      return is_npt(solver.state_at(t), kNptTol);
    case Criterion::Ccnr:
      return violates_ccnr(solver.state_at(t), kDetectionTol);
    default:
      return detection_margin(solver, t, criterion) > kDetectionTol;
  }
}

CriticalTemperature critical_temperature(const ThermalSolver& solver,
                                         Criterion criterion,
                                         const SearchParams& params) {
  validate_params(params);
  CriticalTemperature result;
  result.model = solver.spec();
  result.criterion = criterion;

  if (detects(solver, params.t_max, criterion)) {
    throw BracketExceeded(solver.spec(), criterion, params.t_max);
  }
  // Highest detected grid point; everything above it is undetected or
  // unexplored, which is exactly the highest sign change.
  int hit = -1;
  for (int i = params.grid_points - 2; i >= 0; --i) {
    if (detects(solver, grid_point(params, i), criterion)) {
      hit = i;
      break;
    }
  }
  if (hit < 0) {
    result.status = SearchStatus::NeverDetected;
    return result;
  }

  double lo = grid_point(params, hit);      // detected
  double hi = grid_point(params, hit + 1);  // not detected
  while (hi - lo > params.tol) {
    const double mid = 0.5 * (lo + hi);
    if (detects(solver, mid, criterion)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.status = SearchStatus::Found;
  result.t_lo = lo;
  result.t_hi = hi;
  result.t_c = 0.5 * (lo + hi);
  result.detected_below = true;
  return result;
}

CriticalTemperature critical_temperature(const ModelSpec& model,
                                         Criterion criterion,
                                         const SearchParams& params) {
  return critical_temperature(ThermalSolver(model), criterion, params);
}

std::vector<CriticalTemperature> table1(const Table1Options& opts) {
  std::vector<CriticalTemperature> rows;
  for (ModelFamily family : opts.families) {
    for (int n = opts.n_min; n <= opts.n_max; ++n) {
      ModelSpec spec{family, n, 0.0};
      validate(spec);
      ThermalSolver solver(spec);
      for (Criterion criterion : opts.criteria) {
        rows.push_back(critical_temperature(solver, criterion, opts.search));
      }
    }
  }
  return rows;
}

std::optional<BoundWindow> window_between(const ThermalSolver& solver,
                                          const CriticalTemperature& ppt,
                                          const CriticalTemperature& eqs2,
                                          const SearchParams& params) {
  if (!ppt.found() || !eqs2.found() || eqs2.t_c <= ppt.t_c + params.tol) {
    return std::nullopt;
  }
  BoundWindow window;
  window.t_ppt = ppt.t_c;
  window.t_eqs2 = eqs2.t_c;
  window.midpoint = 0.5 * (ppt.t_c + eqs2.t_c);

  const DensityMatrix state = solver.state_at(window.midpoint);
  window.ppt_min_eigenvalue = ppt_all(state).min_pt_eigenvalue;
  window.eqs2_margin =
      eval_squeezing_inequalities(solver.moments_at(window.midpoint)).max_margin;
  window.ccnr_margin = ccnr_all(state).max_ccnr_margin;
  window.av2_ppt_margin = two_qubit_ppt_margin(avg_two_qubit_state(state));
  return window;
}

std::optional<BoundWindow> bound_window(const ModelSpec& model,
                                        const SearchParams& params) {
  ThermalSolver solver(model);
  CriticalTemperature ppt = critical_temperature(solver, Criterion::Ppt, params);
  CriticalTemperature eqs2 =
      critical_temperature(solver, Criterion::Eqs2, params);
  return window_between(solver, ppt, eqs2, params);
}

std::vector<SweepRow> j2_sweep(double j2_min, double j2_max, int steps,
                               const std::vector<Criterion>& criteria,
                               const SearchParams& params) {
  if (steps < 1) {
    throw std::invalid_argument("sweep needs at least 1 step");
  }
  if (steps > 1 && !(j2_max > j2_min)) {
    throw std::invalid_argument("sweep range must satisfy j2_min < j2_max");
  }
  std::vector<SweepRow> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    SweepRow row;
    row.j2 = steps == 1
                 ? j2_min
                 : j2_min + (j2_max - j2_min) * i / double(steps - 1);
    ModelSpec spec{ModelFamily::Cluster4, 4, row.j2};
    ThermalSolver solver(spec);
    for (Criterion criterion : criteria) {
      row.results.emplace(criterion,
                          critical_temperature(solver, criterion, params));
    }
    const auto ppt_it = row.results.find(Criterion::Ppt);
    const auto eqs2_it = row.results.find(Criterion::Eqs2);
    if (ppt_it != row.results.end() && eqs2_it != row.results.end()) {
      row.window =
          window_between(solver, ppt_it->second, eqs2_it->second, params);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace spinsq
