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

#include <cmath>

#include "cmsim/errors.hpp"
#include "cmsim/qcore.hpp"

namespace cmsim {

namespace {

double unitarity_error(const Matrix& u) {
  const auto n = u.rows();
  return (u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace

UnitaryOperator::UnitaryOperator(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw InvariantViolation("unitary must be a non-empty square matrix");
  }
  if (const double err = unitarity_error(m_); err > tolerance::kUnitarity) {
    throw InvariantViolation("matrix is not unitary (max |U^dagger U - 1| = " +
                             std::to_string(err) + ")");
  }
}

UnitaryOperator UnitaryOperator::trusted(Matrix entries) {
  return UnitaryOperator(std::move(entries), Unchecked{});
}

UnitaryOperator UnitaryOperator::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return UnitaryOperator(Matrix::Identity(n, n), Unchecked{});
}

Matrix interaction_hamiltonian(const CouplingTriple& j) {
  return -0.5 * (j.jx * kron(pauli::x(), pauli::x()) + j.jy * kron(pauli::y(), pauli::y()) +
                 j.jz * kron(pauli::z(), pauli::z()));
}

UnitaryOperator hermitian_exponential(const Matrix& h, double t) {
  if (h.rows() != h.cols()) throw ArgumentError("generator must be square");
  const Matrix herm = (h + h.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  const auto& vals = es.eigenvalues();
  Vector phases(vals.size());
  for (Eigen::Index k = 0; k < vals.size(); ++k) {
    phases(k) = std::polar(1.0, -vals(k) * t);
  }
  const Matrix& v = es.eigenvectors();
  return UnitaryOperator::trusted(v * phases.asDiagonal() * v.adjoint());
}

UnitaryOperator collision_unitary(const CouplingTriple& j, double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw ArgumentError("collision time must be finite and non-negative");
  }
  if (!std::isfinite(j.jx) || !std::isfinite(j.jy) || !std::isfinite(j.jz)) {
    throw ArgumentError("coupling constants must be finite");
  }
  return hermitian_exponential(-interaction_hamiltonian(j), tau);
}

UnitaryOperator partial_swap(double theta) {
  Matrix u = std::cos(theta) * Matrix::Identity(4, 4) -
             Complex(0.0, std::sin(theta)) * swap_unitary().matrix();
  return UnitaryOperator::trusted(std::move(u));
}

UnitaryOperator swap_unitary() {
  Matrix s = Matrix::Zero(4, 4);
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return UnitaryOperator::trusted(std::move(s));
}

}  // namespace cmsim
