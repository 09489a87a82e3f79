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

#include <array>
#include <optional>
#include <string>
#include <string_view>

// Spin-model Hamiltonians with Pauli-matrix couplings, their thermal
// states (k_B = 1, temperatures in coupling units), and the zero-field
// magnetic susceptibility.
namespace spinsq {

enum class ModelFamily {
  HeisenbergRing,      // sum over ring bonds of sigma_k . sigma_{k+1}
  XyRing,              // ring bonds, x and y couplings only
  Cluster4,            // 4-site ring plus j2 times the two diagonals
  HeisenbergComplete,  // all pairs coupled
  XyComplete,
};

const char* family_name(ModelFamily family);
std::optional<ModelFamily> family_from_name(std::string_view name);

struct ModelSpec {
  ModelFamily family = ModelFamily::HeisenbergRing;
  int n = 0;
  double j2 = 0.0;  // next-to-nearest coupling; Cluster4 only

  std::string describe() const;
};

// Throws std::invalid_argument when the spec breaks a family constraint:
// rings need n >= 3, Cluster4 needs n = 4, complete graphs need n >= 2,
// and j2 != 0 is only meaningful for Cluster4.
void validate(const ModelSpec& spec);

Matrix hamiltonian(const ModelSpec& spec);

struct ThermalPoint {
  ModelSpec model;
  double temperature = 0.0;
  DensityMatrix state;
};

// exp(-H/t) / Z. t must be positive; t = +infinity yields the maximally
// mixed state exactly.
ThermalPoint thermal_state(const ModelSpec& spec, double t);

// Diagonalizes H once and serves states and collective moments at any
// temperature; moments cost O(2^n) per query. Immutable after
// construction, safe to share across threads.
class ThermalSolver {
 public:
  explicit ThermalSolver(const ModelSpec& spec);

  const ModelSpec& spec() const { return spec_; }
  const Eigen::VectorXd& spectrum() const { return eig_.eigenvalues; }

  DensityMatrix state_at(double t) const;
  CollectiveMoments moments_at(double t) const;

 private:
  Eigen::VectorXd weights_at(double t) const;

  ModelSpec spec_;
  HermitianEig eig_;
  // Diagonal of V^dag A V for A = J_l and the six symmetrized products.
  std::array<Eigen::VectorXd, 3> j_diag_;
  std::array<Eigen::VectorXd, 6> jj_diag_;
};

// Zero-field susceptibility d<J_l>/dB of the thermal state with a field
// term -B J_l added to H, by central finite difference. When H commutes
// with J_l this equals Var(J_l)/t.
double susceptibility(const ModelSpec& spec, Axis axis, double t,
                      double delta_b = 1e-3);

}  // namespace spinsq
