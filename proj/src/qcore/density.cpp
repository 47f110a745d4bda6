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

#include <cassert>
#include <cmath>
#include <sstream>

#include "cmsim/errors.hpp"
#include "cmsim/qcore.hpp"

namespace cmsim {

namespace {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

double hermiticity_error(const Matrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

void check_shape(const Matrix& m) {
  if (m.rows() != m.cols() || !is_power_of_two(m.rows())) {
    std::ostringstream msg;
    msg << "density operator must be square with power-of-two dimension, got " << m.rows()
        << "x" << m.cols();
    throw InvariantViolation(msg.str());
  }
}

void check_invariants(const Matrix& m) {
  check_shape(m);
  if (!m.allFinite()) throw InvariantViolation("density operator has non-finite entries");
  if (const double err = hermiticity_error(m); err > tolerance::kHermiticity) {
    throw InvariantViolation("density operator is not Hermitian (max |rho - rho^dagger| = " +
                             std::to_string(err) + ")");
  }
  if (const double tr = m.trace().real(); std::abs(tr - 1.0) > tolerance::kTrace) {
    throw InvariantViolation("density operator trace is " + std::to_string(tr));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tolerance::kNegativeEigenvalue) {
    throw InvariantViolation("density operator has eigenvalue " +
                             std::to_string(es.eigenvalues().minCoeff()));
  }
}

}  // namespace

DensityOperator::DensityOperator(Matrix entries) : m_(std::move(entries)) {
  check_invariants(m_);
}

DensityOperator DensityOperator::trusted(Matrix entries) {
  // In-place Hermitian part; registers can be large.
  for (Eigen::Index j = 0; j < entries.cols(); ++j) {
    entries(j, j) = entries(j, j).real();
    for (Eigen::Index i = 0; i < j; ++i) {
      const Complex avg = 0.5 * (entries(i, j) + std::conj(entries(j, i)));
      entries(i, j) = avg;
      entries(j, i) = std::conj(avg);
    }
  }
#ifndef NDEBUG
  check_shape(entries);
  assert(std::abs(entries.trace().real() - 1.0) < 1e-9);
  if (entries.rows() <= 64) check_invariants(entries);
#endif
  return DensityOperator(std::move(entries), Unchecked{});
}

DensityOperator DensityOperator::basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) throw ArgumentError("basis index out of range");
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityOperator(Matrix::Identity(n, n) / static_cast<double>(dim));
}

DensityOperator DensityOperator::pure(const Vector& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw ArgumentError("zero state vector");
  const Vector unit = psi / norm;
  return DensityOperator(unit * unit.adjoint());
}

DensityOperator DensityOperator::from_bloch(double x, double y, double z) {
  if (x * x + y * y + z * z > 1.0 + 1e-12) {
    throw ArgumentError("Bloch vector longer than one");
  }
  Matrix m = 0.5 * (pauli::identity() + x * pauli::x() + y * pauli::y() + z * pauli::z());
  return DensityOperator(std::move(m));
}

int DensityOperator::qubits() const noexcept {
  int q = 0;
  for (auto d = m_.rows(); d > 1; d >>= 1) ++q;
  return q;
}

std::array<double, 3> DensityOperator::bloch() const {
  if (dim() != 2) throw ArgumentError("Bloch vector requested for a multi-qubit state");
  return {2.0 * m_(0, 1).real(), -2.0 * m_(0, 1).imag(), (m_(0, 0) - m_(1, 1)).real()};
}

namespace pauli {
Matrix identity() { return Matrix::Identity(2, 2); }
Matrix x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
Matrix y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
Matrix z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b,
                               std::size_t max_qubits) {
  const auto total = static_cast<std::size_t>(a.qubits() + b.qubits());
  if (total > max_qubits) {
    throw CapacityError("tensor product needs " + std::to_string(total) +
                        " qubits, capacity is " + std::to_string(max_qubits));
  }
  return DensityOperator::trusted(kron(a.matrix(), b.matrix()));
}

Matrix qubit_hamiltonian(const QubitHamiltonianParams& h) { return -h.omega0 * pauli::z(); }

DensityOperator gibbs_qubit(double beta, const QubitHamiltonianParams& h) {
  if (!(beta >= 0.0)) throw ArgumentError("inverse temperature must be non-negative");
  // Energies -omega0 (|0>) and +omega0 (|1>): p1 / p0 = exp(-2 beta omega0).
  const double x = 2.0 * beta * h.omega0;
  double p0 = 0.0;
  if (x >= 0.0) {
    p0 = 1.0 / (1.0 + std::exp(-x));
  } else {
    const double e = std::exp(x);
    p0 = e / (1.0 + e);
  }
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = p0;
  m(1, 1) = 1.0 - p0;
  return DensityOperator(std::move(m));
}

double expectation(const Matrix& op, const DensityOperator& rho) {
  if (op.rows() != rho.matrix().rows()) throw ArgumentError("operator dimension mismatch");
  return (op * rho.matrix()).trace().real();
}

}  // namespace cmsim
