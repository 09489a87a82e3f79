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

#include "spinsq/spin_ops.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace spinsq {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxQubits) +
                                "]");
  }
}

}  // namespace

const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X:
      return "x";
    case Axis::Y:
      return "y";
    case Axis::Z:
      return "z";
  }
  throw std::invalid_argument("invalid axis");
}

const Matrix& pauli(Axis a) {
  static const Matrix sx = [] {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }();
  static const Matrix sy = [] {
    Matrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
  }();
  static const Matrix sz = [] {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }();
  switch (a) {
    case Axis::X:
      return sx;
    case Axis::Y:
      return sy;
    case Axis::Z:
      return sz;
  }
  throw std::invalid_argument("invalid axis");
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double BlochVector::component(Axis a) const {
  switch (a) {
    case Axis::X:
      return x;
    case Axis::Y:
      return y;
    case Axis::Z:
      return z;
  }
  throw std::invalid_argument("invalid axis");
}

std::string DensityCheck::describe_failures() const {
  std::ostringstream out;
  const char* sep = "";
  if (!dim_ok) {
    out << sep << "dimension is not a power of two";
    sep = "; ";
  }
  if (!hermitian) {
    out << sep << "not Hermitian (error " << hermiticity_error << ")";
    sep = "; ";
  }
  if (!unit_trace) {
    out << sep << "trace differs from 1 by " << trace_error;
    sep = "; ";
  }
  if (!psd) {
    out << sep << "negative eigenvalue " << min_eigenvalue;
    sep = "; ";
  }
  return out.str();
}

DensityCheck check_density(const Matrix& m, double tol) {
  DensityCheck result;
  if (m.rows() != m.cols() || m.rows() < 2) {
    return result;
  }
  try {
    qubit_count_for_dim(m.rows());
  } catch (const std::invalid_argument&) {
    return result;
  }
  result.dim_ok = true;
  result.hermiticity_error = (m - m.adjoint()).cwiseAbs().maxCoeff();
  result.hermitian = result.hermiticity_error <= tol;
  result.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
  result.unit_trace = result.trace_error <= tol;
  if (result.hermitian) {
    result.min_eigenvalue = min_hermitian_eigenvalue(m);
    result.psd = result.min_eigenvalue >= -tol;
  }
  return result;
}

DensityMatrix density_from_matrix(Matrix m, double tol) {
  DensityCheck check = check_density(m, tol);
  if (!check.ok()) {
    throw std::invalid_argument("invalid density matrix: " +
                                check.describe_failures());
  }
  DensityMatrix rho;
  rho.n_qubits = qubit_count_for_dim(m.rows());
  rho.mat = std::move(m);
  return rho;
}

namespace {

Matrix build_collective_j(Axis axis, int n) {
  const Eigen::Index d = Eigen::Index(1) << n;
  Matrix j = Matrix::Zero(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (int k = 0; k < n; ++k) {
      const Eigen::Index bit = Eigen::Index(1) << (n - 1 - k);
      switch (axis) {
        case Axis::X:
          j(c ^ bit, c) += Complex(0.5, 0.0);
          break;
        case Axis::Y:
          // <1|sy|0> = i, <0|sy|1> = -i.
          j(c ^ bit, c) += (c & bit) ? Complex(0.0, -0.5) : Complex(0.0, 0.5);
          break;
        case Axis::Z:
          j(c, c) += (c & bit) ? Complex(-0.5, 0.0) : Complex(0.5, 0.0);
          break;
      }
    }
  }
  return j;
}

}  // namespace

const Matrix& collective_j(Axis axis, int n) {
  require_qubit_count(n);
  static std::mutex mu;
  static std::map<std::pair<int, int>, Matrix> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(axis_index(axis), n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, build_collective_j(axis, n)).first;
  }
  return it->second;
}

const Matrix& collective_jj_sym(Axis a, Axis b, int n) {
  require_qubit_count(n);
  if (axis_index(a) > axis_index(b)) {
    std::swap(a, b);
  }
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, Matrix> cache;
  const Matrix& ja = collective_j(a, n);
  const Matrix& jb = collective_j(b, n);
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(axis_index(a), axis_index(b), n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Matrix sym = 0.5 * (ja * jb + jb * ja);
    it = cache.emplace(key, std::move(sym)).first;
  }
  return it->second;
}

CollectiveMoments moments_from_state(const DensityMatrix& rho) {
  require_qubit_count(rho.n_qubits);
  if (rho.mat.rows() != rho.dim() || rho.mat.cols() != rho.dim()) {
    throw std::invalid_argument("density matrix dimension does not match qubit count");
  }
  CollectiveMoments m;
  m.n = rho.n_qubits;
  for (Axis a : kAxes) {
    m.j_vec(axis_index(a)) = real_trace_product(rho.mat, collective_j(a, rho.n_qubits));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      double v = real_trace_product(
          rho.mat, collective_jj_sym(kAxes[i], kAxes[j], rho.n_qubits));
      m.corr(i, j) = v;
      m.corr(j, i) = v;
    }
  }
  return m;
}

CollectiveMoments moments_from_corr(int n, const Eigen::Vector3d& j_vec,
                                    const Eigen::Matrix3d& corr) {
  if (n < 1) {
    throw std::invalid_argument("qubit count must be positive");
  }
  if ((corr - corr.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("correlation matrix must be symmetric");
  }
  CollectiveMoments m;
  m.n = n;
  m.j_vec = j_vec;
  m.corr = 0.5 * (corr + corr.transpose());
  return m;
}

CollectiveMoments moments_from_values(int n, const Eigen::Vector3d& j_vec,
                                      const Eigen::Vector3d& k_vec) {
  Eigen::Matrix3d corr = j_vec * j_vec.transpose();
  corr.diagonal() = k_vec;
  return moments_from_corr(n, j_vec, corr);
}

DensityMatrix product_state(const std::vector<BlochVector>& blochs) {
  const int n = static_cast<int>(blochs.size());
  require_qubit_count(n);
  Matrix rho;
  for (int k = 0; k < n; ++k) {
    const BlochVector& s = blochs[k];
    if (std::abs(s.norm() - 1.0) > 1e-9) {
      throw std::invalid_argument("Bloch vector " + std::to_string(k) +
                                  " is not unit norm");
    }
    Matrix site(2, 2);
    site << Complex(0.5 * (1.0 + s.z), 0.0), Complex(0.5 * s.x, -0.5 * s.y),
        Complex(0.5 * s.x, 0.5 * s.y), Complex(0.5 * (1.0 - s.z), 0.0);
    rho = (k == 0) ? site : kron(rho, site);
  }
  DensityMatrix out;
  out.mat = std::move(rho);
  out.n_qubits = n;
  return out;
}

Matrix collective_rotation(const Eigen::Vector3d& axis_unit, double angle, int n) {
  require_qubit_count(n);
  if (std::abs(axis_unit.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("rotation axis must be unit norm");
  }
  Matrix h = axis_unit(0) * collective_j(Axis::X, n) +
             axis_unit(1) * collective_j(Axis::Y, n) +
             axis_unit(2) * collective_j(Axis::Z, n);
  HermitianEig eig = hermitian_eig(h);
  const Eigen::Index d = h.rows();
  Vector phases(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    phases(i) = std::exp(-kI * Complex(angle * eig.eigenvalues(i), 0.0));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

DensityMatrix avg_two_qubit_state(const DensityMatrix& rho) {
  require_qubit_count(rho.n_qubits);
  if (rho.n_qubits < 2) {
    throw std::invalid_argument("average two-qubit state needs at least 2 qubits");
  }
  Matrix sum = Matrix::Zero(4, 4);
  for (int i = 0; i < rho.n_qubits; ++i) {
    for (int j = i + 1; j < rho.n_qubits; ++j) {
      // partial_trace orders kept qubits ascending; the reversed pair is
      // the same reduction with its two factors swapped.
      Matrix pair = partial_trace(rho.mat, {i, j});
      sum += pair + permute_qubits(pair, {1, 0});
    }
  }
  DensityMatrix out;
  out.mat = sum / double(rho.n_qubits * (rho.n_qubits - 1));
  out.n_qubits = 2;
  return out;
}

DensityMatrix reference_state(ReferenceState which, int n) {
  require_qubit_count(n);
  const Eigen::Index d = Eigen::Index(1) << n;
  Vector psi = Vector::Zero(d);
  switch (which) {
    case ReferenceState::SingletPairs: {
      if (n % 2 != 0) {
        throw std::invalid_argument("singlet-pair state needs an even qubit count");
      }
      Vector pair(4);
      pair << 0, Complex(1.0 / std::sqrt(2.0), 0.0),
          Complex(-1.0 / std::sqrt(2.0), 0.0), 0;
      psi = pair;
      for (int k = 2; k < n; k += 2) {
        Vector next((Eigen::Index(1) << (k + 2)));
        for (Eigen::Index i = 0; i < psi.size(); ++i) {
          for (Eigen::Index j = 0; j < 4; ++j) {
            next(i * 4 + j) = psi(i) * pair(j);
          }
        }
        psi = std::move(next);
      }
      break;
    }
    case ReferenceState::DickeHalf: {
      if (n % 2 != 0) {
        throw std::invalid_argument("half-filled Dicke state needs an even qubit count");
      }
      int count = 0;
      for (Eigen::Index idx = 0; idx < d; ++idx) {
        if (std::popcount(static_cast<unsigned long long>(idx)) == n / 2) {
          psi(idx) = 1.0;
          ++count;
        }
      }
      psi /= std::sqrt(double(count));
      break;
    }
    case ReferenceState::Ghz: {
      psi(0) = Complex(1.0 / std::sqrt(2.0), 0.0);
      psi(d - 1) = Complex(1.0 / std::sqrt(2.0), 0.0);
      break;
    }
  }
  DensityMatrix out;
  out.mat = psi * psi.adjoint();
  out.n_qubits = n;
  return out;
}

}  // namespace spinsq
