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
#include "cmsim/thermo.hpp"

namespace cmsim {

std::string_view to_string(DecompositionSource source) {
  switch (source) {
    case DecompositionSource::FullChain: return "FullChain";
    case DecompositionSource::TwoAncillaToy: return "TwoAncillaToy";
    case DecompositionSource::EraseB: return "EraseB";
    case DecompositionSource::EraseC: return "EraseC";
  }
  return "?";
}

DecompositionSource parse_source(std::string_view name) {
  for (const auto s : {DecompositionSource::FullChain, DecompositionSource::TwoAncillaToy,
                       DecompositionSource::EraseB, DecompositionSource::EraseC}) {
    if (to_string(s) == name) return s;
  }
  throw ArgumentError("unknown decomposition source '" + std::string(name) + "'");
}

namespace {

constexpr double kSingularEigenvalue = 1e-12;

double entropy_of(const std::vector<double>& spectrum) {
  double s = 0.0;
  for (const double p : spectrum) {
    if (p > 1e-15) s -= p * std::log(p);
  }
  return s;
}

// Eigenvalues of rho0^{(x)k} in the product eigenbasis, basis index order.
std::vector<double> product_spectrum(const std::vector<double>& single, std::size_t k) {
  std::vector<double> out{1.0};
  for (std::size_t q = 0; q < k; ++q) {
    std::vector<double> next;
    next.reserve(out.size() * single.size());
    for (const double a : out) {
      for (const double b : single) next.push_back(a * b);
    }
    out = std::move(next);
  }
  return out;
}

double energy(const LabeledRegister& reg, const LabelList& env, const Matrix& h) {
  double e = 0.0;
  for (const auto& l : env) e += expectation(h, marginal(reg, l));
  return e;
}

std::unique_ptr<Representation> make_source(const ModelConfig& cfg, DecompositionSource source) {
  switch (source) {
    case DecompositionSource::FullChain: return make_representation(cfg, SchemeId::FullChain);
    case DecompositionSource::TwoAncillaToy: return make_two_ancilla_toy(cfg);
    case DecompositionSource::EraseB: return make_representation(cfg, SchemeId::EraseB);
    case DecompositionSource::EraseC: return make_representation(cfg, SchemeId::EraseC);
  }
  throw ArgumentError("unknown decomposition source");
}

}  // namespace

EntropyDecomposition decompose_entropy(const LabeledRegister& reg, int step,
                                       const DensityOperator& system0,
                                       const DensityOperator& system_now,
                                       const DensityOperator& ancilla0, const ModelConfig& cfg) {
  EntropyDecomposition out;
  out.step = step;
  out.delta_s_system = von_neumann_entropy(system_now) - von_neumann_entropy(system0);

  LabelList env;
  for (const auto& l : reg.labels()) {
    if (l != kSystemLabel) env.push_back(l);
  }
  if (env.empty()) {
    if (cfg.ancilla_init.kind == AncillaInit::Kind::Gibbs) out.q_gibbs = 0.0;
    return out;
  }

  const auto rho_e = partial_trace(reg, env);
  const std::size_t k = env.size();
  const double dim = static_cast<double>(rho_e.state().dim());

  // rho_E(0) = rho0^{(x)k} is diagonal in the k-fold product of rho0's eigenbasis.
  Eigen::SelfAdjointEigenSolver<Matrix> es(ancilla0.matrix());
  std::vector<double> single;
  for (const double p : es.eigenvalues()) single.push_back(std::max(p, 0.0));
  const auto lambda = product_spectrum(single, k);
  out.regularized = *std::min_element(single.begin(), single.end()) < kSingularEigenvalue;
  std::vector<double> sigma = lambda;
  if (out.regularized) {
    for (auto& s : sigma) s = (1.0 - kEnvironmentRegularization) * s + kEnvironmentRegularization / dim;
  }

  // Diagonal of rho_E(n) in that basis.
  LabeledRegister rotated = rho_e;
  const UnitaryOperator to_eigenbasis = UnitaryOperator::trusted(es.eigenvectors().adjoint());
  for (const auto& l : env) rotated = apply_on(std::move(rotated), {l}, to_eigenbasis);
  const Matrix& rm = rotated.state().matrix();

  double cross_n = 0.0;  // Tr rho_E(n) ln sigma
  double cross_0 = 0.0;  // Tr rho_E(0) ln sigma
  for (std::size_t a = 0; a < sigma.size(); ++a) {
    const double w = rm(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)).real();
    if (sigma[a] <= 0.0) {
      if (w > 1e-10) {
        out.s_env = out.q_term = std::numeric_limits<double>::quiet_NaN();
        return out;
      }
      continue;
    }
    const double log_s = std::log(sigma[a]);
    cross_n += w * log_s;
    cross_0 += lambda[a] * log_s;
  }
  const double s_e0 = static_cast<double>(k) * entropy_of(single);
  const double s_en = von_neumann_entropy(rho_e.state());

  out.s_corr = mutual_information(reg, {kSystemLabel});
  out.s_env = (-s_en - cross_n) - (-s_e0 - cross_0);
  out.q_term = cross_n - cross_0;
  out.minus_delta_s_env = s_e0 - s_en;

  if (cfg.ancilla_init.kind == AncillaInit::Kind::Gibbs) {
    const Matrix h = qubit_hamiltonian(cfg.hamiltonian());
    const double e0 = static_cast<double>(k) * expectation(h, ancilla0);
    out.q_gibbs = -cfg.ancilla_init.beta * (energy(reg, env, h) - e0);
  }
  return out;
}

std::vector<EntropyDecomposition> entropy_decomposition_series(const ModelConfig& cfg,
                                                               DecompositionSource source) {
  auto rep = make_source(cfg, source);
  const auto ancilla0 = cfg.ancilla_state();
  std::vector<EntropyDecomposition> out;
  out.reserve(static_cast<std::size_t>(cfg.steps) + 1);
  for (int n = 0;; ++n) {
    out.push_back(decompose_entropy(rep->state(), n, cfg.system_init, rep->system(), ancilla0, cfg));
    if (n == cfg.steps) break;
    rep->advance();
  }
  return out;
}

EntropyDecomposition entropy_decomposition(const ModelConfig& cfg, int n, DecompositionSource source) {
  if (n < 0) throw ArgumentError("step must be >= 0");
  ModelConfig sized = cfg;
  sized.steps = n;
  return entropy_decomposition_series(sized, source).back();
}

std::vector<HeatRecord> heat_series(const ModelConfig& cfg, SchemeId scheme) {
  const auto traj = evolve(cfg, scheme, {.keep_register = false, .record_ancillas = true});
  const Matrix h = qubit_hamiltonian(cfg.hamiltonian());
  const double e_s0 = expectation(h, cfg.system_init);
  const double e_a0 = expectation(h, cfg.ancilla_state());

  std::vector<HeatRecord> out;
  double departed = 0.0;
  for (const auto& s : traj.steps) {
    for (const auto& a : s.departed) departed += e_a0 - expectation(h, a.state);
    double live = 0.0;
    for (const auto& a : s.live) live += e_a0 - expectation(h, a.state);
    out.push_back({s.step, e_s0 - expectation(h, s.system), departed + live});
  }
  return out;
}

FluxAlignment flux_alignment(const ModelConfig& cfg, const StatePair& pair, SchemeId scheme) {
  if (!cfg.sa_coupling.isotropic()) {
    throw UnsupportedConfiguration("flux alignment needs an energy-preserving (isotropic) "
                                   "system-ancilla coupling");
  }
  if (cfg.ancilla_init.kind != AncillaInit::Kind::Gibbs) {
    throw UnsupportedConfiguration("flux alignment needs Gibbs-state ancillas");
  }
  const Matrix h = qubit_hamiltonian(cfg.hamiltonian());
  std::array<std::vector<DensityOperator>, 2> states;
  for (int m = 0; m < 2; ++m) {
    ModelConfig member = cfg;
    member.system_init = m == 0 ? pair.first : pair.second;
    states[static_cast<std::size_t>(m)] = evolve(member, scheme).system_states();
  }
  const auto distance = values(distance_series(states[0], states[1]));

  FluxAlignment out;
  for (std::size_t n = 0; n + 1 < distance.size(); ++n) {
    out.distance_derivative.push_back(distance[n + 1] - distance[n]);
  }
  out.agreement_fraction = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < 2; ++m) {
    auto& member = out.members[m];
    const auto& traj = states[m];
    const double e0 = expectation(h, traj.front());
    std::vector<double> q;
    for (const auto& rho : traj) q.push_back(e0 - expectation(h, rho));
    int same = 0;
    int opposite = 0;
    for (std::size_t n = 0; n + 1 < q.size(); ++n) {
      const double dq = q[n + 1] - q[n];
      const double dd = out.distance_derivative[n];
      member.heat_flux.push_back(dq);
      if (std::abs(dq) <= kFluxThreshold || std::abs(dd) <= kFluxThreshold) continue;
      ((dq > 0) == (dd > 0) ? same : opposite) += 1;
    }
    member.counted_steps = same + opposite;
    member.degenerate = member.counted_steps == 0;
    member.sign = same >= opposite ? 1 : -1;
    if (member.degenerate) {
      member.agreement_fraction = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    member.agreement_fraction = static_cast<double>(std::max(same, opposite)) / member.counted_steps;
    out.agreement_fraction = std::min(out.agreement_fraction, member.agreement_fraction);
    out.degenerate = false;
  }
  if (out.degenerate) out.agreement_fraction = std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace cmsim
