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

#include "spinsq/criteria.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>

namespace spinsq {

namespace {

void require_ensemble(const CollectiveMoments& m) {
  if (m.n < 2) {
    throw std::invalid_argument("criteria need at least 2 qubits, got " +
                                std::to_string(m.n));
  }
}

// The two axes different from k, in cyclic order.
std::pair<int, int> other_axes(int k) {
  return {(k + 1) % 3, (k + 2) % 3};
}

void finalize(CriterionReport& report) {
  report.max_margin = -std::numeric_limits<double>::infinity();
  for (const auto& [id, margin] : report.margins) {
    if (margin > report.max_margin) {
      report.max_margin = margin;
      report.argmax_id = id;
    }
  }
  report.detected = report.max_margin > kDetectionTol;
}

}  // namespace

CriterionReport eval_squeezing_inequalities(const CollectiveMoments& m) {
  return eval_squeezing_inequalities(m, CriterionOptions{});
}

CriterionReport eval_squeezing_inequalities(const CollectiveMoments& m,
                                            const CriterionOptions& opts) {
  require_ensemble(m);
  const double n = m.n;
  const Eigen::Vector3d k_vec = m.k_vec();
  Eigen::Vector3d var;
  for (int l = 0; l < 3; ++l) {
    var(l) = k_vec(l) - m.j_vec(l) * m.j_vec(l);
  }

  CriterionReport report;
  report.margins["eq2a"] = k_vec.sum() - n * (n + 2.0) / 4.0;
  report.margins["eq2b"] = n / 2.0 - var.sum();
  for (int k = 0; k < 3; ++k) {
    auto [i, j] = other_axes(k);
    report.margins[std::string("eq2c_") + axis_name(kAxes[k])] =
        k_vec(i) + k_vec(j) - n / 2.0 - (n - 1.0) * var(k);
    report.margins[std::string("eq2d_") + axis_name(kAxes[k])] =
        k_vec(k) + n * (n - 2.0) / 4.0 - (n - 1.0) * (var(i) + var(j));
  }
  if (opts.include_eq1) {
    if (auto eq1 = eval_standard_squeezing(m, opts.eq1_squeezed_axis)) {
      report.margins["eq1"] = *eq1;
    }
  }
  if (opts.include_case2) {
    report.margins["case2"] = eval_dicke_criterion(m, opts.case2_normal_axis);
  }
  finalize(report);
  return report;
}

std::optional<double> eval_standard_squeezing(const CollectiveMoments& m,
                                              Axis squeezed) {
  require_ensemble(m);
  const int s = axis_index(squeezed);
  auto [i, j] = other_axes(s);
  const double denom = m.j_vec(i) * m.j_vec(i) + m.j_vec(j) * m.j_vec(j);
  if (denom < 1e-18) {
    return std::nullopt;
  }
  const double var = m.k_vec()(s) - m.j_vec(s) * m.j_vec(s);
  return 1.0 / m.n - var / denom;
}

double eval_dicke_criterion(const CollectiveMoments& m, Axis normal) {
  require_ensemble(m);
  const double n = m.n;
  auto [i, j] = other_axes(axis_index(normal));
  return m.k_vec()(i) + m.k_vec()(j) - (n * n + n) / 4.0;
}

ExtremePoints extreme_points(const Eigen::Vector3d& j_vec, int n) {
  if (n < 2) {
    throw std::invalid_argument("extreme points need at least 2 qubits");
  }
  if (j_vec.norm() > n / 2.0 + 1e-12) {
    throw std::invalid_argument("mean spin norm exceeds n/2");
  }
  ExtremePoints pts;
  pts.kappa = (n - 1.0) / n;
  for (int k = 0; k < 3; ++k) {
    auto [i, j] = other_axes(k);
    const double perp2 = j_vec(i) * j_vec(i) + j_vec(j) * j_vec(j);
    Eigen::Vector3d a;
    a(k) = n * n / 4.0 - pts.kappa * perp2;
    a(i) = n / 4.0 + pts.kappa * j_vec(i) * j_vec(i);
    a(j) = n / 4.0 + pts.kappa * j_vec(j) * j_vec(j);
    Eigen::Vector3d b = a;
    b(k) = j_vec(k) * j_vec(k) + perp2 / n;
    pts.a_points[k] = a;
    pts.b_points[k] = b;
  }
  return pts;
}

namespace {

struct TwoComponentModel {
  BlochVector plus;
  BlochVector minus;
  double p = 0.0;  // weight of the plus component
  double c = 0.0;  // attainable polarization along the singled-out axis
};

// Shared feasibility analysis for both corner constructions: splits the
// mean spin into a transverse part carried by every spin and a weight p
// steering the component along `axis`.
TwoComponentModel corner_model(Axis axis, const Eigen::Vector3d& j_vec, int n) {
  const int k = axis_index(axis);
  auto [i, j] = other_axes(k);
  const double big_j = n / 2.0;
  const double perp2 = j_vec(i) * j_vec(i) + j_vec(j) * j_vec(j);
  if (perp2 > big_j * big_j + 1e-9) {
    throw std::domain_error("transverse mean spin exceeds n/2");
  }
  TwoComponentModel model;
  const double c2 = 1.0 - perp2 / (big_j * big_j);
  model.c = c2 > 0.0 ? std::sqrt(c2) : 0.0;
  if (model.c <= 1e-12) {
    throw std::domain_error(
        "degenerate direction: transverse mean spin saturates n/2");
  }
  model.p = 0.5 * (1.0 + j_vec(k) / (big_j * model.c));
  if (model.p < -1e-9 || model.p > 1.0 + 1e-9) {
    throw std::domain_error("mean spin infeasible for this corner");
  }
  model.p = std::min(1.0, std::max(0.0, model.p));
  Eigen::Vector3d bloch = Eigen::Vector3d::Zero();
  bloch(i) = j_vec(i) / big_j;
  bloch(j) = j_vec(j) / big_j;
  bloch(k) = model.c;
  model.plus = BlochVector{bloch(0), bloch(1), bloch(2)};
  bloch(k) = -model.c;
  model.minus = BlochVector{bloch(0), bloch(1), bloch(2)};
  return model;
}

// Product state with the first n_plus spins along `plus` and the rest
// along `minus`.
DensityMatrix split_product(const BlochVector& plus, const BlochVector& minus,
                            int n_plus, int n) {
  std::vector<BlochVector> blochs;
  blochs.reserve(n);
  for (int q = 0; q < n; ++q) {
    blochs.push_back(q < n_plus ? plus : minus);
  }
  return product_state(blochs);
}

}  // namespace

DensityMatrix separable_extreme_a(Axis axis, const Eigen::Vector3d& j_vec,
                                  int n) {
  if (n < 2) {
    throw std::invalid_argument("corner construction needs at least 2 qubits");
  }
  TwoComponentModel model = corner_model(axis, j_vec, n);
  DensityMatrix plus = split_product(model.plus, model.plus, n, n);
  DensityMatrix minus = split_product(model.minus, model.minus, 0, n);
  DensityMatrix out;
  out.n_qubits = n;
  out.mat = model.p * plus.mat + (1.0 - model.p) * minus.mat;
  return out;
}

SeparableApproximation separable_extreme_b(Axis axis,
                                           const Eigen::Vector3d& j_vec,
                                           int n) {
  if (n < 2) {
    throw std::invalid_argument("corner construction needs at least 2 qubits");
  }
  TwoComponentModel model = corner_model(axis, j_vec, n);
  double m_real = n * model.p;
  // Snap near-integer spin counts so float noise does not open a gap.
  double rounded = std::round(m_real);
  if (std::abs(m_real - rounded) < 1e-9) {
    m_real = rounded;
  }
  const int m_lo = static_cast<int>(std::floor(m_real));
  const double eps = m_real - m_lo;

  SeparableApproximation result;
  if (eps == 0.0) {
    result.state = split_product(model.plus, model.minus, m_lo, n);
    result.gap = 0.0;
    return result;
  }
  DensityMatrix lo = split_product(model.plus, model.minus, m_lo, n);
  DensityMatrix hi = split_product(model.plus, model.minus, m_lo + 1, n);
  result.state.n_qubits = n;
  result.state.mat = (1.0 - eps) * lo.mat + eps * hi.mat;
  result.gap = model.c * model.c * eps * (1.0 - eps);
  return result;
}

Eigen::Matrix3d rotation_about(const Eigen::Vector3d& axis_unit, double angle) {
  if (std::abs(axis_unit.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("rotation axis must be unit norm");
  }
  return Eigen::AngleAxisd(angle, axis_unit).toRotationMatrix();
}

CollectiveMoments rotate_moments(const CollectiveMoments& m,
                                 const Eigen::Matrix3d& o) {
  if ((o.transpose() * o - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() >
      1e-10) {
    throw std::invalid_argument("frame change matrix is not orthogonal");
  }
  CollectiveMoments out;
  out.n = m.n;
  out.j_vec = o * m.j_vec;
  Eigen::Matrix3d corr = o * m.corr * o.transpose();
  out.corr = 0.5 * (corr + corr.transpose());
  return out;
}

DirectionAnalysis optimal_directions(const CollectiveMoments& m) {
  require_ensemble(m);
  const double n = m.n;
  const Eigen::Matrix3d cov = m.cov();
  const Eigen::Matrix3d x = (n - 1.0) * cov + m.corr;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(x);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("3x3 symmetric eigensolver failed");
  }

  DirectionAnalysis out;
  out.x_eigenvalues = solver.eigenvalues();
  out.o = solver.eigenvectors().transpose();
  if (out.o.determinant() < 0.0) {
    out.o.row(2) *= -1.0;
  }
  out.report = eval_squeezing_inequalities(rotate_moments(m, out.o));

  const double tr_corr = m.corr.trace();
  const double tr_cov = cov.trace();
  out.eq2c_best_margin = tr_corr - n / 2.0 - out.x_eigenvalues(0);
  out.eq2d_best_margin =
      out.x_eigenvalues(2) + n * (n - 2.0) / 4.0 - (n - 1.0) * tr_cov;
  out.eq2c_violated_some_direction = out.eq2c_best_margin > kDetectionTol;
  out.eq2d_violated_some_direction = out.eq2d_best_margin > kDetectionTol;
  return out;
}

}  // namespace spinsq
