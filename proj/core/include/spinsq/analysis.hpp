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

#pragma once

#include "spinsq/criteria.hpp"
#include "spinsq/models.hpp"
#include "spinsq/separability.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

// Critical-temperature searches: for each entanglement criterion, the
// temperature below which the thermal state of a model is detected.
namespace spinsq {

enum class Criterion {
  Eqs2,   // max margin of the eight squeezing inequalities, lab axes
  Eq1,    // standard squeezing margin (often inapplicable at zero mean spin)
  Case2,  // Dicke second-moment margin
  Ppt,    // -(min partial-transpose eigenvalue) over bipartitions
  Ccnr,   // max realignment margin over bipartitions
};

inline constexpr std::array<Criterion, 5> kAllCriteria{
    Criterion::Eqs2, Criterion::Eq1, Criterion::Case2, Criterion::Ppt,
    Criterion::Ccnr};

const char* criterion_name(Criterion c);
std::optional<Criterion> criterion_from_name(std::string_view name);

struct SearchParams {
  double t_min = 0.02;
  double t_max = 10.0;
  int grid_points = 200;  // log-spaced coarse grid
  double tol = 1e-4;      // final bracket width in temperature
};

enum class SearchStatus { Found, NeverDetected };

struct CriticalTemperature {
  ModelSpec model;
  Criterion criterion = Criterion::Eqs2;
  SearchStatus status = SearchStatus::NeverDetected;
  // Valid when status == Found: the criterion fires at t_lo, does not at
  // t_hi, t_hi - t_lo <= tol, and t_c is the midpoint.
  double t_c = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  bool detected_below = false;

  bool found() const { return status == SearchStatus::Found; }
};

// Raised when the criterion still fires at the top of the search range,
// so no upper bracket exists; retry with a larger t_max.
class BracketExceeded : public std::runtime_error {
 public:
  BracketExceeded(const ModelSpec& model, Criterion criterion, double t_max);
  double t_max() const { return t_max_; }

 private:
  double t_max_;
};

// Signed detection margin of one criterion on the thermal state at
// temperature t; positive means entanglement detected. Eq1 yields
// -infinity when inapplicable. The ThermalSolver overloads reuse a
// prebuilt eigendecomposition and are the fast path for sweeps.
double detection_margin(const ModelSpec& model, double t, Criterion criterion);
double detection_margin(const ThermalSolver& solver, double t,
                        Criterion criterion);

// margin > tolerance, where the tolerance is kNptTol for Ppt and
// kDetectionTol otherwise; stops at the first bipartition that settles
// the verdict.
bool detects(const ThermalSolver& solver, double t, Criterion criterion);

// Coarse scan on a log grid over [t_min, t_max] for the highest
// detected->undetected sign change, then bisection to params.tol. Returns
// a NeverDetected result when no grid point is detected; throws
// BracketExceeded when the top grid point is still detected.
CriticalTemperature critical_temperature(const ModelSpec& model,
                                         Criterion criterion,
                                         const SearchParams& params = {});
CriticalTemperature critical_temperature(const ThermalSolver& solver,
                                         Criterion criterion,
                                         const SearchParams& params = {});

struct Table1Options {
  int n_min = 3;
  int n_max = 9;
  std::vector<ModelFamily> families{ModelFamily::HeisenbergRing,
                                    ModelFamily::XyRing};
  std::vector<Criterion> criteria{Criterion::Eqs2, Criterion::Ppt};
  SearchParams search;
};

// Critical temperatures for every (family, n, criterion) combination,
// ordered family-major, then n ascending, then criterion order as given.
std::vector<CriticalTemperature> table1(const Table1Options& opts = {});

// Temperature interval where the state is entangled (the squeezing
// inequalities still fire) but PPT with respect to every bipartition, so
// no entanglement can be distilled across any cut. The midpoint fields
// record the certification measurements.
struct BoundWindow {
  double t_ppt = 0.0;   // lower edge: all partial transposes turn positive
  double t_eqs2 = 0.0;  // upper edge: squeezing detection stops
  double midpoint = 0.0;
  double ppt_min_eigenvalue = 0.0;  // at midpoint, over all bipartitions
  double eqs2_margin = 0.0;
  double ccnr_margin = 0.0;
  double av2_ppt_margin = 0.0;  // of the averaged two-qubit state

  // All four midpoint conditions hold: PPT everywhere, squeezing margin
  // clearly positive, no realignment violation, averaged two-qubit state
  // separable.
  bool certified() const {
    return ppt_min_eigenvalue >= -kNptTol && eqs2_margin > 1e-6 &&
           ccnr_margin <= 1e-9 && av2_ppt_margin <= 1e-9;
  }
};

std::optional<BoundWindow> bound_window(const ModelSpec& model,
                                        const SearchParams& params = {});

// Window assembled from precomputed critical temperatures (lets callers
// share the searches); nullopt unless both were found and
// t_eqs2 > t_ppt + params.tol.
std::optional<BoundWindow> window_between(const ThermalSolver& solver,
                                          const CriticalTemperature& ppt,
                                          const CriticalTemperature& eqs2,
                                          const SearchParams& params = {});

struct SweepRow {
  double j2 = 0.0;
  std::map<Criterion, CriticalTemperature> results;
  std::optional<BoundWindow> window;
};

// Critical temperatures of the 4-site cluster model versus the diagonal
// coupling j2, linearly spaced; steps = 1 evaluates j2_min only. The
// window is computed when both Eqs2 and Ppt are requested.
std::vector<SweepRow> j2_sweep(double j2_min, double j2_max, int steps,
                               const std::vector<Criterion>& criteria,
                               const SearchParams& params = {});

}  // namespace spinsq
