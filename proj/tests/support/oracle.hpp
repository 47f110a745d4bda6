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

// Slow, straightforward reference implementations used to cross-check the
// library. Nothing here calls into cmsim beyond plain Eigen types.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline M pauli(char which) {
  M p(2, 2);
  switch (which) {
    case 'x': p << 0, 1, 1, 0; break;
    case 'y': p << 0, C(0, -1), C(0, 1), 0; break;
    case 'z': p << 1, 0, 0, -1; break;
    default: p << 1, 0, 0, 1; break;
  }
  return p;
}

inline M kron(const M& a, const M& b) {
  M out = M::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// exp(a) by scaling and squaring with a 30-term Taylor series.
inline M expm(const M& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const M scaled = a / std::pow(2.0, squarings);
  M term = M::Identity(a.rows(), a.cols());
  M sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// Two-qubit collision exp(+i tau (-(1/2)(Jx XX + Jy YY + Jz ZZ))).
inline M collision(double jx, double jy, double jz, double tau) {
  const M h = -0.5 * (jx * kron(pauli('x'), pauli('x')) + jy * kron(pauli('y'), pauli('y')) +
                      jz * kron(pauli('z'), pauli('z')));
  return expm(C(0, tau) * h);
}

inline int bit(std::size_t index, int qubit, int n) { return static_cast<int>((index >> (n - 1 - qubit)) & 1u); }

/// Two-qubit gate acting on qubits (a, b) of an n-qubit register, qubit 0 most
/// significant. Built entry by entry.
inline M embed(const M& gate, int a, int b, int n) {
  const std::size_t dim = std::size_t{1} << n;
  M out = M::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      bool others_match = true;
      for (int q = 0; q < n; ++q) {
        if (q != a && q != b && bit(r, q, n) != bit(c, q, n)) others_match = false;
      }
      if (!others_match) continue;
      const int gr = 2 * bit(r, a, n) + bit(r, b, n);
      const int gc = 2 * bit(c, a, n) + bit(c, b, n);
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = gate(gr, gc);
    }
  }
  return out;
}

/// Reduced state on the listed qubits (in the order given) by summing over
/// every basis index.
inline M partial_trace(const M& rho, const std::vector<int>& keep, int n) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t kd = std::size_t{1} << keep.size();
  M out = M::Zero(static_cast<Eigen::Index>(kd), static_cast<Eigen::Index>(kd));
  const auto sub = [&](std::size_t idx) {
    std::size_t s = 0;
    for (int q : keep) s = (s << 1) | static_cast<std::size_t>(bit(idx, q, n));
    return s;
  };
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      bool traced_match = true;
      for (int q = 0; q < n; ++q) {
        bool kept = false;
        for (int k : keep) kept = kept || k == q;
        if (!kept && bit(r, q, n) != bit(c, q, n)) traced_match = false;
      }
      if (traced_match) {
        out(static_cast<Eigen::Index>(sub(r)), static_cast<Eigen::Index>(sub(c))) +=
            rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      }
    }
  }
  return out;
}

/// Qubit trace distance from Bloch vectors: |r_a - r_b| / 2.
inline double qubit_trace_distance(const M& a, const M& b) {
  const M d = a - b;
  const double x = 2.0 * d(0, 1).real();
  const double y = -2.0 * d(0, 1).imag();
  const double z = (d(0, 0) - d(1, 1)).real();
  return 0.5 * std::sqrt(x * x + y * y + z * z);
}

/// Qubit von Neumann entropy from the Bloch length.
inline double qubit_entropy(const M& rho) {
  const double x = 2.0 * rho(0, 1).real();
  const double y = -2.0 * rho(0, 1).imag();
  const double z = (rho(0, 0) - rho(1, 1)).real();
  const double r = std::min(1.0, std::sqrt(x * x + y * y + z * z));
  double s = 0.0;
  for (const double p : {(1 + r) / 2, (1 - r) / 2}) {
    if (p > 1e-300) s -= p * std::log(p);
  }
  return s;
}

struct ChainParams {
  double sa[3];
  double aa[3];
  double tau_sa;
  double tau_aa;
  int depth;
  int steps;
  M system;
  M ancilla;
};

/// Every ancilla the run will touch is present from the start; S is qubit 0
/// and E_k is qubit k. Returns rho_S after each step, starting with step 0.
inline std::vector<M> full_chain(const ChainParams& p) {
  const int d = p.depth;
  const int n = 1 + d * p.steps;
  M rho = p.system;
  for (int k = 1; k < n; ++k) rho = kron(rho, p.ancilla);
  const M u_sa = collision(p.sa[0], p.sa[1], p.sa[2], p.tau_sa);
  const M u_aa = collision(p.aa[0], p.aa[1], p.aa[2], p.tau_aa);
  const auto hit = [&](const M& gate, int a, int b) {
    const M u = embed(gate, a, b, n);
    rho = u * rho * u.adjoint();
  };
  std::vector<M> out{partial_trace(rho, {0}, n)};
  for (int step = 1; step <= p.steps; ++step) {
    if (step > 1) {
      const int base = (step - 2) * d + 1;
      for (int l = 0; l <= d; ++l)
        for (int m = l + 1; m <= d; ++m) hit(u_aa, base + l, base + m);
    }
    for (int i = (step - 1) * d + 1; i <= step * d; ++i) hit(u_sa, 0, i);
    out.push_back(partial_trace(rho, {0}, n));
  }
  return out;
}

}  // namespace oracle
