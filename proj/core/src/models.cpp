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

#include "spinsq/models.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinsq {

const char* family_name(ModelFamily family) {
  switch (family) {
    case ModelFamily::HeisenbergRing:
      return "heisenberg_ring";
    case ModelFamily::XyRing:
      return "xy_ring";
    case ModelFamily::Cluster4:
      return "cluster4";
    case ModelFamily::HeisenbergComplete:
      return "heisenberg_complete";
    case ModelFamily::XyComplete:
      return "xy_complete";
  }
  throw std::invalid_argument("invalid model family");
}

std::optional<ModelFamily> family_from_name(std::string_view name) {
  for (ModelFamily f :
       {ModelFamily::HeisenbergRing, ModelFamily::XyRing, ModelFamily::Cluster4,
        ModelFamily::HeisenbergComplete, ModelFamily::XyComplete}) {
    if (name == family_name(f)) {
      return f;
    }
  }
  return std::nullopt;
}

std::string ModelSpec::describe() const {
  std::ostringstream out;
  out << family_name(family) << " n=" << n;
  if (family == ModelFamily::Cluster4) {
    out << " j2=" << j2;
  }
  return out.str();
}

void validate(const ModelSpec& spec) {
  if (spec.n < 2 || spec.n > kMaxQubits) {
    throw std::invalid_argument("model size " + std::to_string(spec.n) +
                                " outside [2, " + std::to_string(kMaxQubits) +
                                "]");
  }
  switch (spec.family) {
    case ModelFamily::HeisenbergRing:
    case ModelFamily::XyRing:
      if (spec.n < 3) {
        throw std::invalid_argument("ring models need n >= 3");
      }
      break;
    case ModelFamily::Cluster4:
      if (spec.n != 4) {
        throw std::invalid_argument("cluster4 is defined for n = 4 only");
      }
      break;
    case ModelFamily::HeisenbergComplete:
    case ModelFamily::XyComplete:
      break;
  }
  if (spec.family != ModelFamily::Cluster4 && spec.j2 != 0.0) {
    throw std::invalid_argument(
        "j2 coupling only applies to the cluster4 family");
  }
  if (!std::isfinite(spec.j2)) {
    throw std::invalid_argument("j2 must be finite");
  }
}

namespace {

struct Bond {
  int a;
  int b;
  double coeff;
};

// Adds coeff * sum over coupled axes of sigma_l^(a) sigma_l^(b). The
// entries are filled directly from the bit action of the Pauli matrices;
// the result is real.
void add_bond(Matrix& h, const Bond& bond, bool with_z, int n) {
  const Eigen::Index d = h.rows();
  const Eigen::Index bit_a = Eigen::Index(1) << (n - 1 - bond.a);
  const Eigen::Index bit_b = Eigen::Index(1) << (n - 1 - bond.b);
  for (Eigen::Index c = 0; c < d; ++c) {
    const bool equal_bits = ((c & bit_a) != 0) == ((c & bit_b) != 0);
    const Eigen::Index flipped = c ^ bit_a ^ bit_b;
    // xx flips both bits with amplitude 1; yy flips with amplitude -1 when
    // the two bits agree and +1 otherwise; zz is diagonal.
    h(flipped, c) += bond.coeff;
    h(flipped, c) += equal_bits ? -bond.coeff : bond.coeff;
    if (with_z) {
      h(c, c) += equal_bits ? bond.coeff : -bond.coeff;
    }
  }
}

std::vector<Bond> bonds_for(const ModelSpec& spec) {
  std::vector<Bond> bonds;
  switch (spec.family) {
    case ModelFamily::HeisenbergRing:
    case ModelFamily::XyRing:
      for (int k = 0; k < spec.n; ++k) {
        bonds.push_back({k, (k + 1) % spec.n, 1.0});
      }
      break;
    case ModelFamily::Cluster4:
      for (int k = 0; k < 4; ++k) {
        bonds.push_back({k, (k + 1) % 4, 1.0});
      }
      bonds.push_back({0, 2, spec.j2});
      bonds.push_back({1, 3, spec.j2});
      break;
    case ModelFamily::HeisenbergComplete:
    case ModelFamily::XyComplete:
      for (int i = 0; i < spec.n; ++i) {
        for (int j = i + 1; j < spec.n; ++j) {
          bonds.push_back({i, j, 1.0});
        }
      }
      break;
  }
  return bonds;
}

bool couples_z(ModelFamily family) {
  return family == ModelFamily::HeisenbergRing ||
         family == ModelFamily::Cluster4 ||
         family == ModelFamily::HeisenbergComplete;
}

int pair_slot(int a, int b) {
  // (0,0)->0 (1,1)->1 (2,2)->2 (0,1)->3 (0,2)->4 (1,2)->5
  if (a == b) return a;
  if (a > b) std::swap(a, b);
  return 2 + a + b;
}

void require_temperature(double t) {
  if (std::isnan(t) || t <= 0.0) {
    throw std::domain_error("temperature must be positive");
  }
}

}  // namespace

Matrix hamiltonian(const ModelSpec& spec) {
  validate(spec);
  const Eigen::Index d = Eigen::Index(1) << spec.n;
  Matrix h = Matrix::Zero(d, d);
  const bool with_z = couples_z(spec.family);
  for (const Bond& bond : bonds_for(spec)) {
    if (bond.coeff != 0.0) {
      add_bond(h, bond, with_z, spec.n);
    }
  }
  return h;
}

ThermalPoint thermal_state(const ModelSpec& spec, double t) {
  require_temperature(t);
  const double beta = std::isinf(t) ? 0.0 : 1.0 / t;
  ThermalPoint point;
  point.model = spec;
  point.temperature = t;
  point.state.n_qubits = spec.n;
  point.state.mat = expm_hermitian_normalized(hamiltonian(spec), beta);
  return point;
}

ThermalSolver::ThermalSolver(const ModelSpec& spec)
    : spec_(spec), eig_(hermitian_eig(hamiltonian(spec))) {
  const Matrix& v = eig_.eigenvectors;
  const Eigen::Index d = v.rows();
  std::array<Matrix, 3> jv;
  for (int a = 0; a < 3; ++a) {
    jv[a] = collective_j(kAxes[a], spec_.n) * v;
    j_diag_[a].resize(d);
    for (Eigen::Index i = 0; i < d; ++i) {
      j_diag_[a](i) = v.col(i).dot(jv[a].col(i)).real();
    }
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a; b < 3; ++b) {
      Eigen::VectorXd& diag = jj_diag_[pair_slot(a, b)];
      diag.resize(d);
      // v_i^dag (Ja Jb + Jb Ja)/2 v_i = Re[(Ja v_i)^dag (Jb v_i)] because
      // the J_l are Hermitian.
      for (Eigen::Index i = 0; i < d; ++i) {
        diag(i) = jv[a].col(i).dot(jv[b].col(i)).real();
      }
    }
  }
}

Eigen::VectorXd ThermalSolver::weights_at(double t) const {
  require_temperature(t);
  const Eigen::Index d = eig_.eigenvalues.size();
  if (std::isinf(t)) {
    return Eigen::VectorXd::Constant(d, 1.0 / double(d));
  }
  const double beta = 1.0 / t;
  const double shift = eig_.eigenvalues.minCoeff();
  Eigen::VectorXd w = (-beta * (eig_.eigenvalues.array() - shift)).exp();
  w /= w.sum();
  return w;
}

DensityMatrix ThermalSolver::state_at(double t) const {
  Eigen::VectorXd w = weights_at(t);
  DensityMatrix rho;
  rho.n_qubits = spec_.n;
  rho.mat = eig_.eigenvectors * w.asDiagonal() * eig_.eigenvectors.adjoint();
  return rho;
}

CollectiveMoments ThermalSolver::moments_at(double t) const {
  Eigen::VectorXd w = weights_at(t);
  CollectiveMoments m;
  m.n = spec_.n;
  for (int a = 0; a < 3; ++a) {
    m.j_vec(a) = w.dot(j_diag_[a]);
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a; b < 3; ++b) {
      const double value = w.dot(jj_diag_[pair_slot(a, b)]);
      m.corr(a, b) = value;
      m.corr(b, a) = value;
    }
  }
  return m;
}

double susceptibility(const ModelSpec& spec, Axis axis, double t,
                      double delta_b) {
  require_temperature(t);
  if (std::isinf(t)) {
    throw std::domain_error("susceptibility needs a finite temperature");
  }
  if (!(delta_b > 0.0) || !std::isfinite(delta_b)) {
    throw std::domain_error("field step must be positive and finite");
  }
  const Matrix h = hamiltonian(spec);
  const Matrix& j = collective_j(axis, spec.n);
  const double beta = 1.0 / t;
  // Zeeman coupling -B J_l: a positive field favors positive <J_l>, so
  // the zero-field susceptibility equals Var(J_l)/t whenever [H, J_l] = 0.
  const Matrix plus = expm_hermitian_normalized(h - delta_b * j, beta);
  const Matrix minus = expm_hermitian_normalized(h + delta_b * j, beta);
  return (real_trace_product(plus, j) - real_trace_product(minus, j)) /
         (2.0 * delta_b);
}

}  // namespace spinsq
