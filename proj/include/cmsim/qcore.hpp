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

#pragma once

// Dense qubit linear algebra: density operators, unitaries, collision
// generators and entropic functionals. Registers of labelled qubits live in
// register.hpp.

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace cmsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest register (in qubits) any operation will build unless told otherwise.
/// 12 qubits is a 4096 x 4096 complex matrix, roughly 270 MB.
inline constexpr std::size_t kDefaultMaxQubits = 12;

namespace tolerance {
inline constexpr double kHermiticity = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kNegativeEigenvalue = 1e-10;
inline constexpr double kUnitarity = 1e-12;
}  // namespace tolerance

/// Hermitian, unit-trace, positive semidefinite matrix of power-of-two dimension.
class DensityOperator {
 public:
  /// Checks all invariants and throws InvariantViolation when one fails.
  explicit DensityOperator(Matrix entries);

  /// Wraps the output of a trace- and positivity-preserving map without the
  /// eigenvalue check. The Hermitian part is kept; debug builds still verify.
  static DensityOperator trusted(Matrix entries);

  static DensityOperator basis_state(std::size_t dim, std::size_t index);
  static DensityOperator maximally_mixed(std::size_t dim);
  /// |psi><psi| for a (not necessarily normalised) state vector.
  static DensityOperator pure(const Vector& psi);
  /// Qubit state (I + x X + y Y + z Z) / 2; requires x^2 + y^2 + z^2 <= 1.
  static DensityOperator from_bloch(double x, double y, double z);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  int qubits() const noexcept;
  /// Moves the entries out, leaving this object empty.
  Matrix into_matrix() && { return std::move(m_); }
  const Matrix& matrix() const noexcept { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  /// Bloch vector (x, y, z) of a single-qubit state.
  std::array<double, 3> bloch() const;

 private:
  struct Unchecked {};
  DensityOperator(Matrix entries, Unchecked) : m_(std::move(entries)) {}

  Matrix m_;
};

class UnitaryOperator {
 public:
  /// Throws InvariantViolation unless U^dagger U = 1 within tolerance.
  explicit UnitaryOperator(Matrix entries);
  static UnitaryOperator trusted(Matrix entries);
  static UnitaryOperator identity(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }

 private:
  struct Unchecked {};
  UnitaryOperator(Matrix entries, Unchecked) : m_(std::move(entries)) {}

  Matrix m_;
};

/// Coefficients of the XX, YY and ZZ exchange terms of a two-qubit collision.
struct CouplingTriple {
  double jx = 1.0;
  double jy = 1.0;
  double jz = 1.0;

  bool isotropic() const noexcept { return jx == jy && jy == jz; }
  bool operator==(const CouplingTriple&) const = default;
};

/// Free qubit Hamiltonian H = -omega0 sigma_z (hbar = 1). |0> is the ground state.
struct QubitHamiltonianParams {
  double omega0 = 1.0;
};

namespace pauli {
Matrix identity();
Matrix x();
Matrix y();
Matrix z();
}  // namespace pauli

Matrix kron(const Matrix& a, const Matrix& b);

/// Kronecker product of two states. Throws CapacityError past max_qubits.
DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b,
                               std::size_t max_qubits = kDefaultMaxQubits);

/// -(1/2)(Jx XX + Jy YY + Jz ZZ), the two-qubit exchange Hamiltonian.
Matrix interaction_hamiltonian(const CouplingTriple& j);

/// exp(-i H t) from the eigendecomposition of the Hermitian part of H.
UnitaryOperator hermitian_exponential(const Matrix& h, double t);

/// Two-qubit collision propagator for coupling j acting for time tau.
///
/// The rotation sense is fixed so that isotropic couplings J give the
/// partial swap cos(J tau) 1 - i sin(J tau) S up to a global phase; this is
/// exp(+i H tau) for the exchange Hamiltonian returned by
/// interaction_hamiltonian(). For real initial states the two senses yield
/// complex-conjugate trajectories and identical observables.
UnitaryOperator collision_unitary(const CouplingTriple& j, double tau);

/// cos(theta) 1 - i sin(theta) S.
UnitaryOperator partial_swap(double theta);

/// S|ab> = |ba>.
UnitaryOperator swap_unitary();

Matrix qubit_hamiltonian(const QubitHamiltonianParams& h);

/// exp(-beta H) / Z for H = -omega0 sigma_z.
DensityOperator gibbs_qubit(double beta, const QubitHamiltonianParams& h = {});

/// Re Tr(op rho).
double expectation(const Matrix& op, const DensityOperator& rho);

/// (1/2) || a - b ||_1.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

/// Eigenvalues of rho with [-1e-10, 0) clamped to zero. More negative values
/// throw InvariantViolation.
std::vector<double> clamped_spectrum(const DensityOperator& rho);

/// -Tr rho ln rho, in nats.
double von_neumann_entropy(const DensityOperator& rho);

/// Tr rho (ln rho - ln sigma) in nats. Returns +infinity when the support of
/// rho is not contained in that of sigma.
double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

/// Tr (a ln sigma) for Hermitian a and full-rank sigma.
double trace_with_log(const Matrix& a, const DensityOperator& sigma);

}  // namespace cmsim
