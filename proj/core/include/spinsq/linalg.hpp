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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

// Dense complex linear algebra for multi-qubit operators.
//
// Index convention used throughout the library: qubit 0 is the MOST
// significant factor of the Kronecker ordering, i.e. basis index
// b = b_0 b_1 ... b_{n-1} in binary with b_0 the leading bit. All qubit
// subset operations (partial transpose/trace, realignment, permutations)
// follow this convention.
namespace spinsq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Largest supported register; dimensions beyond 2^12 are out of scope.
inline constexpr int kMaxQubits = 12;

// Hermiticity tolerance for operator inputs.
inline constexpr double kHermTol = 1e-10;

// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
// eigenvector columns orthonormal; V diag(lambda) V^dagger reconstructs
// the input to 1e-9 (max-abs) for dimensions up to 2^kMaxQubits.
struct HermitianEig {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

// A bipartition of an n-qubit register, canonicalized so that the left
// set contains qubit 0 (a bipartition and its complement are the same
// cut). Construction from a set not containing qubit 0 stores the
// complement instead.
class Bipartition {
 public:
  Bipartition(int n_qubits, const std::vector<int>& left_set);
  static Bipartition from_mask(int n_qubits, std::uint32_t mask);

  int n_qubits() const { return n_qubits_; }
  // Bit k set <=> qubit k belongs to the left set.
  std::uint32_t mask() const { return mask_; }
  std::vector<int> left() const;
  std::vector<int> right() const;
  int left_size() const;
  bool contains(int qubit) const { return (mask_ >> qubit) & 1u; }

 private:
  int n_qubits_;
  std::uint32_t mask_;
};

// All 2^(n-1) - 1 canonical bipartitions, ordered by ascending mask.
std::vector<Bipartition> all_bipartitions(int n_qubits);

// n inferred from a 2^n x 2^n matrix; throws std::invalid_argument if the
// dimension is not a power of two in [2, 2^kMaxQubits].
int qubit_count_for_dim(Eigen::Index dim);

bool is_hermitian(const Matrix& m, double tol = kHermTol);

Matrix kron(const Matrix& a, const Matrix& b);

// Throws std::invalid_argument unless h is square and Hermitian to kHermTol.
HermitianEig hermitian_eig(const Matrix& h);
Eigen::VectorXd hermitian_eigenvalues(const Matrix& h);
double min_hermitian_eigenvalue(const Matrix& h);

// exp(-beta h) / Tr exp(-beta h), computed spectrally with the minimum
// eigenvalue shifted out before exponentiation so large beta cannot
// overflow. beta = 0 returns I/d exactly.
Matrix expm_hermitian_normalized(const Matrix& h, double beta);

// Relabels qubits: position i of the result carries the factor that was
// qubit new_order[i] of the input. new_order must be a permutation of
// 0..n-1.
Matrix permute_qubits(const Matrix& op, const std::vector<int>& new_order);

// Transposes the indices of the qubits in the left set of `part`.
Matrix partial_transpose(const Matrix& rho, const Bipartition& part);

// Reduced matrix on `keep` (ascending qubit order), tracing out the rest.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep);

// Realigned matrix R of shape dA^2 x dB^2 for the given bipartition:
// after moving the left set to the leading factors,
//   R[(i,j), (k,l)] = rho[(i,k), (j,l)],  i,j < dA,  k,l < dB.
// Separable states have trace_norm(R) <= 1.
Matrix realign(const Matrix& rho, const Bipartition& part);

// Sum of singular values (nuclear norm).
double trace_norm(const Matrix& m);

// Tr(rho a) for Hermitian a, discarding the vanishing imaginary part.
double real_trace_product(const Matrix& rho, const Matrix& a);

}  // namespace spinsq
