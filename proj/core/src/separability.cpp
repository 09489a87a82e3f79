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

#include "spinsq/separability.hpp"

#include "spinsq/parallel.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace spinsq {

namespace {

void require_multipartite(const DensityMatrix& rho) {
  if (rho.n_qubits < 2) {
    throw std::invalid_argument("separability tests need at least 2 qubits");
  }
  if (rho.mat.rows() != rho.dim() || rho.mat.cols() != rho.dim()) {
    throw std::invalid_argument("density matrix dimension does not match qubit count");
  }
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

BipartitionVerdicts ppt_all(const DensityMatrix& rho) {
  require_multipartite(rho);
  std::vector<Bipartition> parts = all_bipartitions(rho.n_qubits);
  BipartitionVerdicts out;
  out.records.reserve(parts.size());
  for (const Bipartition& part : parts) {
    out.records.push_back({part, kNaN, kNaN});
  }
  parallel_for(parts.size(), [&](std::size_t i) {
    out.records[i].min_pt_eigenvalue =
        min_hermitian_eigenvalue(partial_transpose(rho.mat, parts[i]));
  });
  out.min_pt_eigenvalue = std::numeric_limits<double>::infinity();
  out.max_ccnr_margin = kNaN;
  for (const BipartitionRecord& rec : out.records) {
    out.min_pt_eigenvalue = std::min(out.min_pt_eigenvalue, rec.min_pt_eigenvalue);
  }
  return out;
}

BipartitionVerdicts ccnr_all(const DensityMatrix& rho) {
  require_multipartite(rho);
  std::vector<Bipartition> parts = all_bipartitions(rho.n_qubits);
  BipartitionVerdicts out;
  out.records.reserve(parts.size());
  for (const Bipartition& part : parts) {
    out.records.push_back({part, kNaN, kNaN});
  }
  parallel_for(parts.size(), [&](std::size_t i) {
    out.records[i].ccnr_margin = trace_norm(realign(rho.mat, parts[i])) - 1.0;
  });
  out.min_pt_eigenvalue = kNaN;
  out.max_ccnr_margin = -std::numeric_limits<double>::infinity();
  for (const BipartitionRecord& rec : out.records) {
    out.max_ccnr_margin = std::max(out.max_ccnr_margin, rec.ccnr_margin);
  }
  return out;
}

double two_qubit_ppt_margin(const DensityMatrix& rho2) {
  if (rho2.n_qubits != 2 || rho2.mat.rows() != 4 || rho2.mat.cols() != 4) {
    throw std::invalid_argument("two-qubit test needs a 4x4 state");
  }
  Bipartition cut(2, {0});
  return -min_hermitian_eigenvalue(partial_transpose(rho2.mat, cut));
}

bool is_npt(const DensityMatrix& rho, double tol) {
  require_multipartite(rho);
  std::vector<Bipartition> parts = all_bipartitions(rho.n_qubits);
  return parallel_any(parts.size(), [&](std::size_t i) {
    return min_hermitian_eigenvalue(partial_transpose(rho.mat, parts[i])) < -tol;
  });
}

bool violates_ccnr(const DensityMatrix& rho, double tol) {
  require_multipartite(rho);
  std::vector<Bipartition> parts = all_bipartitions(rho.n_qubits);
  return parallel_any(parts.size(), [&](std::size_t i) {
    return trace_norm(realign(rho.mat, parts[i])) - 1.0 > tol;
  });
}

}  // namespace spinsq
