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

#include "spinsq/spin_ops.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

// Spin-squeezing entanglement criteria expressed through the first and
// second moments of the collective angular momenta. Every margin is
// oriented so that a positive value certifies entanglement.
namespace spinsq {

// Margins below this absolute value count as "not violated"; separates
// genuine violations from eigensolver noise at the dimensions we use.
inline constexpr double kDetectionTol = 1e-9;

// Identifiers of the eight inequalities, in report order. The first two
// are rotation invariant; the _x/_y/_z variants single out one axis.
inline constexpr std::array<const char*, 8> kInequalityIds{
    "eq2a", "eq2b", "eq2c_x", "eq2c_y", "eq2c_z",
    "eq2d_x", "eq2d_y", "eq2d_z"};

struct CriterionOptions {
  bool include_eq1 = false;    // add the standard squeezing margin ("eq1")
  bool include_case2 = false;  // add the Dicke-state margin ("case2")
  // Axis whose variance enters the standard squeezing parameter; the mean
  // spin is measured in the plane orthogonal to it.
  Axis eq1_squeezed_axis = Axis::X;
  // Axis excluded from the Dicke second-moment sum.
  Axis case2_normal_axis = Axis::Z;
};

struct CriterionReport {
  // id -> signed margin; positive means the inequality is violated and
  // entanglement is detected. Always holds the eight kInequalityIds;
  // "eq1" and "case2" appear only when requested and applicable.
  std::map<std::string, double> margins;
  bool detected = false;
  double max_margin = 0.0;
  std::string argmax_id;
};

// Evaluates all eight inequalities. With n the qubit count, K_l the second
// moments, Var_l the variances and {i,j,k} axis permutations:
//   eq2a   = K_x + K_y + K_z - n(n+2)/4
//   eq2b   = n/2 - (Var_x + Var_y + Var_z)
//   eq2c_k = K_i + K_j - n/2 - (n-1) Var_k
//   eq2d_k = K_k + n(n-2)/4 - (n-1)(Var_i + Var_j)
// Requires m.n >= 2.
CriterionReport eval_squeezing_inequalities(const CollectiveMoments& m);
CriterionReport eval_squeezing_inequalities(const CollectiveMoments& m,
                                            const CriterionOptions& opts);

// Standard squeezing margin 1/n - Var(J_s) / (sum of squared means over
// the other two axes). Returns nullopt when the mean-spin denominator
// vanishes, which makes the criterion inapplicable rather than violated.
std::optional<double> eval_standard_squeezing(const CollectiveMoments& m,
                                              Axis squeezed = Axis::X);

// Margin K_i + K_j - (n^2 + n)/4 over the two axes orthogonal to
// `normal`; positive values flag states close to a half-filled Dicke
// state, which maximizes the in-plane second moments.
double eval_dicke_criterion(const CollectiveMoments& m, Axis normal = Axis::Z);

// Corners of the polytope of second moments (K_x, K_y, K_z) reachable by
// separable states at fixed mean spin. a(k) maximizes the second moment
// along k; b(k) minimizes it. kappa = (n-1)/n.
struct ExtremePoints {
  std::array<Eigen::Vector3d, 3> a_points;
  std::array<Eigen::Vector3d, 3> b_points;
  double kappa = 0.0;

  const Eigen::Vector3d& a(Axis k) const { return a_points[axis_index(k)]; }
  const Eigen::Vector3d& b(Axis k) const { return b_points[axis_index(k)]; }
};

// Requires |j_vec| <= n/2.
ExtremePoints extreme_points(const Eigen::Vector3d& j_vec, int n);

// Two-component mixture of polarized product states whose moments realize
// corner a(axis) exactly at the given mean spin. Throws std::domain_error
// when the transverse mean spin leaves no room along `axis` (degenerate
// direction) or when j_vec is infeasible for n spins.
DensityMatrix separable_extreme_a(Axis axis, const Eigen::Vector3d& j_vec, int n);

// Product-state construction for corner b(axis). When the required number
// of flipped spins is not an integer the corner is only approximated:
// the state's second moment along `axis` exceeds the corner value by
// `gap` = c^2 eps (1 - eps) <= 1/4, with eps the fractional part.
struct SeparableApproximation {
  DensityMatrix state;
  double gap = 0.0;
};

SeparableApproximation separable_extreme_b(Axis axis,
                                           const Eigen::Vector3d& j_vec, int n);

// Right-handed rotation matrix about the unit axis. Moments of the state
// rotated by collective_rotation(axis, angle, n) equal the moments mapped
// through this matrix.
Eigen::Matrix3d rotation_about(const Eigen::Vector3d& axis_unit, double angle);

// Applies a change of measurement frame: j -> o j, corr -> o corr o^T.
// o must be orthogonal within 1e-10.
CollectiveMoments rotate_moments(const CollectiveMoments& m,
                                 const Eigen::Matrix3d& o);

// Frame that diagonalizes X := (n-1) cov + corr, whose eigenvectors are
// the optimal measurement directions for the axis-singling inequalities.
struct DirectionAnalysis {
  // Orthogonal with determinant +1; rows are the optimal axes, ordered by
  // ascending eigenvalue of X.
  Eigen::Matrix3d o;
  Eigen::Vector3d x_eigenvalues;  // ascending
  // Inequalities re-evaluated in the rotated frame.
  CriterionReport report;
  // Best achievable margins over all measurement directions; closed forms
  //   eq2c: tr(corr) - n/2 - lambda_min(X)
  //   eq2d: lambda_max(X) + n(n-2)/4 - (n-1) tr(cov)
  double eq2c_best_margin = 0.0;
  double eq2d_best_margin = 0.0;
  bool eq2c_violated_some_direction = false;
  bool eq2d_violated_some_direction = false;
};

DirectionAnalysis optimal_directions(const CollectiveMoments& m);

}  // namespace spinsq
