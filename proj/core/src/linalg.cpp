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

#include "spinsq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinsq {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square and nonempty");
  }
}

void require_hermitian(const Matrix& m, const char* who) {
  require_square(m, who);
  if (!is_hermitian(m)) {
    throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian");
  }
}

// Index bit for qubit k of an n-qubit register (qubit 0 = most significant).
inline int index_bit(int qubit, int n) { return n - 1 - qubit; }

}  // namespace

Bipartition::Bipartition(int n_qubits, const std::vector<int>& left_set)
    : n_qubits_(n_qubits), mask_(0) {
  if (n_qubits < 2 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("Bipartition: n_qubits must be in [2, 12]");
  }
  for (int q : left_set) {
    if (q < 0 || q >= n_qubits) {
      throw std::invalid_argument("Bipartition: qubit index out of range");
    }
    if ((mask_ >> q) & 1u) {
      throw std::invalid_argument("Bipartition: duplicate qubit index");
    }
    mask_ |= 1u << q;
  }
  const std::uint32_t full = (1u << n_qubits) - 1u;
  if (mask_ == 0 || mask_ == full) {
    throw std::invalid_argument("Bipartition: left set must be a nonempty proper subset");
  }
  if (!(mask_ & 1u)) mask_ = full & ~mask_;  // canonical form contains qubit 0
}

Bipartition Bipartition::from_mask(int n_qubits, std::uint32_t mask) {
  std::vector<int> set;
  for (int q = 0; q < n_qubits; ++q) {
    if ((mask >> q) & 1u) set.push_back(q);
  }
  return Bipartition(n_qubits, set);
}

std::vector<int> Bipartition::left() const {
  std::vector<int> out;
  for (int q = 0; q < n_qubits_; ++q) {
    if (contains(q)) out.push_back(q);
  }
  return out;
}

std::vector<int> Bipartition::right() const {
  std::vector<int> out;
  for (int q = 0; q < n_qubits_; ++q) {
    if (!contains(q)) out.push_back(q);
  }
  return out;
}

int Bipartition::left_size() const {
  int c = 0;
  for (int q = 0; q < n_qubits_; ++q) c += contains(q) ? 1 : 0;
  return c;
}

std::vector<Bipartition> all_bipartitions(int n_qubits) {
  if (n_qubits < 2 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("all_bipartitions: n_qubits must be in [2, 12]");
  }
  const std::uint32_t full = (1u << n_qubits) - 1u;
  std::vector<Bipartition> out;
  out.reserve((1u << (n_qubits - 1)) - 1u);
  for (std::uint32_t mask = 1u; mask < full; mask += 2u) {  // canonical: bit 0 set
    out.push_back(Bipartition::from_mask(n_qubits, mask));
  }
  return out;
}

int qubit_count_for_dim(Eigen::Index dim) {
  for (int n = 1; n <= kMaxQubits; ++n) {
    if (dim == (Eigen::Index(1) << n)) return n;
  }
  throw std::invalid_argument("dimension is not a power of two in [2, 2^12]");
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

HermitianEig hermitian_eig(const Matrix& h) {
  require_hermitian(h, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& h) {
  require_hermitian(h, "hermitian_eigenvalues");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
  }
  return solver.eigenvalues();
}

double min_hermitian_eigenvalue(const Matrix& h) {
  return hermitian_eigenvalues(h).minCoeff();
}

Matrix expm_hermitian_normalized(const Matrix& h, double beta) {
  require_hermitian(h, "expm_hermitian_normalized");
  if (!std::isfinite(beta) || beta < 0.0) {
    throw std::domain_error("expm_hermitian_normalized: beta must be finite and >= 0");
  }
  const Eigen::Index d = h.rows();
  if (beta == 0.0) {
    return Matrix::Identity(d, d) / static_cast<double>(d);
  }
  const HermitianEig eig = hermitian_eig(h);
  const double shift = eig.eigenvalues.minCoeff();
  Eigen::VectorXd w = (-beta * (eig.eigenvalues.array() - shift)).exp();
  w /= w.sum();
  return eig.eigenvectors * w.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix permute_qubits(const Matrix& op, const std::vector<int>& new_order) {
  require_square(op, "permute_qubits");
  const int n = qubit_count_for_dim(op.rows());
  if (static_cast<int>(new_order.size()) != n) {
    throw std::invalid_argument("permute_qubits: permutation size mismatch");
  }
  std::uint32_t seen = 0;
  for (int q : new_order) {
    if (q < 0 || q >= n || ((seen >> q) & 1u)) {
      throw std::invalid_argument("permute_qubits: not a permutation of 0..n-1");
    }
    seen |= 1u << q;
  }
  const Eigen::Index d = op.rows();
  std::vector<Eigen::Index> map(d);
  for (Eigen::Index idx = 0; idx < d; ++idx) {
    Eigen::Index out = 0;
    for (int pos = 0; pos < n; ++pos) {
      const Eigen::Index bit = (idx >> index_bit(new_order[pos], n)) & 1;
      out |= bit << index_bit(pos, n);
    }
    map[idx] = out;
  }
  Matrix result(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      result(map[r], map[c]) = op(r, c);
    }
  }
  return result;
}

Matrix partial_transpose(const Matrix& rho, const Bipartition& part) {
  require_square(rho, "partial_transpose");
  const int n = qubit_count_for_dim(rho.rows());
  if (n != part.n_qubits()) {
    throw std::invalid_argument("partial_transpose: bipartition does not match matrix dimension");
  }
  Eigen::Index swap_mask = 0;
  for (int q = 0; q < n; ++q) {
    if (part.contains(q)) swap_mask |= Eigen::Index(1) << index_bit(q, n);
  }
  const Eigen::Index d = rho.rows();
  Matrix out(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const Eigen::Index rr = (r & ~swap_mask) | (c & swap_mask);
      const Eigen::Index cc = (c & ~swap_mask) | (r & swap_mask);
      out(rr, cc) = rho(r, c);
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep) {
  require_square(rho, "partial_trace");
  const int n = qubit_count_for_dim(rho.rows());
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set must be nonempty");
  }
  std::uint32_t keep_mask = 0;
  for (int q : keep) {
    if (q < 0 || q >= n) {
      throw std::invalid_argument("partial_trace: qubit index out of range");
    }
    if ((keep_mask >> q) & 1u) {
      throw std::invalid_argument("partial_trace: duplicate qubit index");
    }
    keep_mask |= 1u << q;
  }
  std::vector<int> kept, traced;
  for (int q = 0; q < n; ++q) {
    ((keep_mask >> q) & 1u ? kept : traced).push_back(q);
  }
  const int m = static_cast<int>(kept.size());
  const int t = n - m;
  const Eigen::Index dk = Eigen::Index(1) << m;
  const Eigen::Index dt = Eigen::Index(1) << t;

  // Spread the bits of a subsystem index onto the listed qubit positions.
  auto spread = [n](Eigen::Index sub, const std::vector<int>& qubits) {
    Eigen::Index out = 0;
    const int sz = static_cast<int>(qubits.size());
    for (int i = 0; i < sz; ++i) {
      const Eigen::Index bit = (sub >> (sz - 1 - i)) & 1;
      out |= bit << index_bit(qubits[i], n);
    }
    return out;
  };

  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index io = 0; io < dk; ++io) {
    const Eigen::Index ri = spread(io, kept);
    for (Eigen::Index jo = 0; jo < dk; ++jo) {
      const Eigen::Index cj = spread(jo, kept);
      Complex sum(0.0, 0.0);
      for (Eigen::Index tr = 0; tr < dt; ++tr) {
        const Eigen::Index e = spread(tr, traced);
        sum += rho(ri | e, cj | e);
      }
      out(io, jo) = sum;
    }
  }
  return out;
}

Matrix realign(const Matrix& rho, const Bipartition& part) {
  require_square(rho, "realign");
  const int n = qubit_count_for_dim(rho.rows());
  if (n != part.n_qubits()) {
    throw std::invalid_argument("realign: bipartition does not match matrix dimension");
  }
  std::vector<int> order = part.left();
  for (int q : part.right()) order.push_back(q);
  const Matrix perm = permute_qubits(rho, order);

  const Eigen::Index da = Eigen::Index(1) << part.left_size();
  const Eigen::Index db = rho.rows() / da;
  Matrix out(da * da, db * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      for (Eigen::Index k = 0; k < db; ++k) {
        for (Eigen::Index l = 0; l < db; ++l) {
          out(i * da + j, k * db + l) = perm(i * db + k, j * db + l);
        }
      }
    }
  }
  return out;
}

double trace_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double real_trace_product(const Matrix& rho, const Matrix& a) {
  return rho.cwiseProduct(a.conjugate()).sum().real();
}

}  // namespace spinsq
