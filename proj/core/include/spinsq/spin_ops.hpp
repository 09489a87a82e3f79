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

#include <array>
#include <string>
#include <vector>

// Collective angular momentum operators J_l = (1/2) sum_k sigma_l^(k),
// reference states, and extraction of first/second collective moments.
namespace spinsq {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};
inline int axis_index(Axis a) { return static_cast<int>(a); }
const char* axis_name(Axis a);

// 2x2 Pauli matrix for the given axis.
const Matrix& pauli(Axis a);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  double component(Axis a) const;
};

// An N-qubit density matrix together with its qubit count. Builders in
// this library produce valid states by construction; density_from_matrix
// validates untrusted input.
struct DensityMatrix {
  Matrix mat;
  int n_qubits = 0;

  Eigen::Index dim() const { return Eigen::Index(1) << n_qubits; }
};

// Outcome of validating a candidate density matrix.
struct DensityCheck {
  bool dim_ok = false;
  bool hermitian = false;
  bool unit_trace = false;
  bool psd = false;
  double hermiticity_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;

  bool ok() const { return dim_ok && hermitian && unit_trace && psd; }
  // Human-readable list of failed checks, empty when ok().
  std::string describe_failures() const;
};

DensityCheck check_density(const Matrix& m, double tol = 1e-8);

// Throws std::invalid_argument (message lists the failed checks) unless m
// passes check_density.
DensityMatrix density_from_matrix(Matrix m, double tol = 1e-8);

// Collective J_l for an n-qubit register. Built once per (axis, n) and
// cached immutably; the returned reference stays valid for the process
// lifetime and is safe to read concurrently.
const Matrix& collective_j(Axis axis, int n);

// Cached symmetrized product (J_a J_b + J_b J_a) / 2.
const Matrix& collective_jj_sym(Axis a, Axis b, int n);

// First and second moments of the collective angular momenta:
// j_vec = <J_l>, corr(k,l) = <J_k J_l + J_l J_k>/2. The second-moment
// vector and the covariance matrix are derived views so their defining
// relations hold by construction.
struct CollectiveMoments {
  int n = 0;
  Eigen::Vector3d j_vec = Eigen::Vector3d::Zero();
  Eigen::Matrix3d corr = Eigen::Matrix3d::Zero();

  Eigen::Vector3d k_vec() const { return corr.diagonal(); }
  Eigen::Matrix3d cov() const { return corr - j_vec * j_vec.transpose(); }
  double mean(Axis a) const { return j_vec(axis_index(a)); }
  double second_moment(Axis a) const { return corr(axis_index(a), axis_index(a)); }
  double variance(Axis a) const {
    return second_moment(a) - mean(a) * mean(a);
  }
};

CollectiveMoments moments_from_state(const DensityMatrix& rho);

// Moments from measured values. The second overload fills the unknown
// off-diagonal correlations with <J_i><J_j> (zero covariance).
CollectiveMoments moments_from_corr(int n, const Eigen::Vector3d& j_vec,
                                    const Eigen::Matrix3d& corr);
CollectiveMoments moments_from_values(int n, const Eigen::Vector3d& j_vec,
                                      const Eigen::Vector3d& k_vec);

// Pure product state with the given single-qubit Bloch vectors (each must
// be unit norm). Qubit 0 is the leading Kronecker factor.
DensityMatrix product_state(const std::vector<BlochVector>& blochs);

// Global rotation U = exp(-i angle (axis . J)). axis_unit must have unit
// norm. Rotating the state by U corresponds to rotating moments by the
// right-handed rotation matrix about the same axis and angle.
Matrix collective_rotation(const Eigen::Vector3d& axis_unit, double angle, int n);

// (1 / N(N-1)) sum over ordered pairs i != j of the reduced state on
// (i, j); requires n >= 2.
DensityMatrix avg_two_qubit_state(const DensityMatrix& rho);

enum class ReferenceState {
  SingletPairs,  // two-qubit singlets on adjacent pairs (0,1), (2,3), ...
  DickeHalf,     // symmetric Dicke state with N/2 excitations
  Ghz,
};

// SingletPairs and DickeHalf require even n.
DensityMatrix reference_state(ReferenceState which, int n);

}  // namespace spinsq
