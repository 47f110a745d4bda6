// Copyright 2026 The cmsim Authors
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

#include <algorithm>
#include <cmath>
#include <limits>

#include "cmsim/errors.hpp"
#include "cmsim/qcore.hpp"

namespace cmsim {

namespace {

constexpr double kEigenFloor = 1e-15;
// Support test for relative entropy: sigma eigenvalue treated as zero below
// this, and rho weight on such a direction counted above kSupportWeight.
constexpr double kSupportEigenvalue = 1e-12;
constexpr double kSupportWeight = 1e-10;

Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) * 0.5; }

void require_same_dim(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) {
    throw ArgumentError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                        std::to_string(b.dim()));
  }
}

double entropy_term(double p) { return p > kEigenFloor ? -p * std::log(p) : 0.0; }

}  // namespace

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  require_same_dim(a, b);
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(a.matrix() - b.matrix()),
                                           Eigen::EigenvaluesOnly);
  return std::clamp(0.5 * es.eigenvalues().cwiseAbs().sum(), 0.0, 1.0);
}

std::vector<double> clamped_spectrum(const DensityOperator& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(rho.matrix()), Eigen::EigenvaluesOnly);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(es.eigenvalues().size()));
  for (const double v : es.eigenvalues()) {
    if (v < -tolerance::kNegativeEigenvalue) {
      throw InvariantViolation("negative eigenvalue " + std::to_string(v));
    }
    out.push_back(std::clamp(v, 0.0, 1.0));
  }
  return out;
}

double von_neumann_entropy(const DensityOperator& rho) {
  double s = 0.0;
  for (const double p : clamped_spectrum(rho)) s += entropy_term(p);
  return s;
}

double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho, sigma);
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(sigma.matrix()));
  const Matrix& v = es.eigenvectors();
  // Tr rho ln sigma = sum_k <k|rho|k> ln s_k
  double cross = 0.0;
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    const double weight = (v.col(k).adjoint() * rho.matrix() * v.col(k))(0, 0).real();
    const double s = es.eigenvalues()(k);
    if (s < kSupportEigenvalue) {
      if (weight > kSupportWeight) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log(s);
  }
  const double value = -von_neumann_entropy(rho) - cross;
  return std::max(value, 0.0);
}

double trace_with_log(const Matrix& a, const DensityOperator& sigma) {
  if (a.rows() != sigma.matrix().rows()) throw ArgumentError("dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(sigma.matrix()));
  const Matrix& v = es.eigenvectors();
  double acc = 0.0;
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    const double s = es.eigenvalues()(k);
    if (s <= 0.0) throw ArgumentError("logarithm of a singular state");
    acc += (v.col(k).adjoint() * a * v.col(k))(0, 0).real() * std::log(s);
  }
  return acc;
}

}  // namespace cmsim
