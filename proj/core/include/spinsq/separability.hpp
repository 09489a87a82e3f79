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

#include "spinsq/linalg.hpp"
#include "spinsq/spin_ops.hpp"

#include <vector>

// Separability tests over all canonical bipartitions: positivity of the
// partial transpose and the realignment (trace norm) bound.
namespace spinsq {

// Eigenvalues of a partial transpose above -kNptTol count as nonnegative;
// the threshold sits below eigensolver noise at the dimensions we use but
// well below the physical negativities near detection thresholds.
inline constexpr double kNptTol = 1e-10;

struct BipartitionRecord {
  Bipartition part;
  // Fields are NaN when the corresponding test was not run.
  double min_pt_eigenvalue = 0.0;
  double ccnr_margin = 0.0;
};

// One record per canonical bipartition, in enumeration order.
struct BipartitionVerdicts {
  std::vector<BipartitionRecord> records;
  double min_pt_eigenvalue = 0.0;  // min over records
  double max_ccnr_margin = 0.0;    // max over records

  bool any_npt(double tol = kNptTol) const {
    return min_pt_eigenvalue < -tol;
  }
  bool any_ccnr_violation(double tol = 1e-9) const {
    return max_ccnr_margin > tol;
  }
};

// Minimum partial-transpose eigenvalue for every bipartition. A negative
// value below -kNptTol certifies entanglement (and distillability) across
// that cut. Bipartitions are processed on the worker pool.
BipartitionVerdicts ppt_all(const DensityMatrix& rho);

// Realignment margin trace_norm(realign(rho, part)) - 1 for every
// bipartition; positive margin certifies entanglement.
BipartitionVerdicts ccnr_all(const DensityMatrix& rho);

// -(min eigenvalue of the partial transpose) of a two-qubit state, where
// positivity of the partial transpose is necessary and sufficient for
// separability: margin > 0 means entangled, <= 0 means separable.
double two_qubit_ppt_margin(const DensityMatrix& rho2);

// Early-exit variants for search loops: stop at the first bipartition
// that settles the verdict.
bool is_npt(const DensityMatrix& rho, double tol = kNptTol);
bool violates_ccnr(const DensityMatrix& rho, double tol = 1e-9);

}  // namespace spinsq
