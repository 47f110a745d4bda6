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

// Entropy and heat bookkeeping for collision-model runs.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "cmsim/diagnostics.hpp"
#include "cmsim/engine.hpp"

namespace cmsim {

enum class DecompositionSource { FullChain, TwoAncillaToy, EraseB, EraseC };

std::string_view to_string(DecompositionSource source);
DecompositionSource parse_source(std::string_view name);

/// Mixing weight applied to a singular initial environment state before its
/// logarithm is taken: rho_E(0) <- (1 - eps) rho_E(0) + eps 1 / dim.
inline constexpr double kEnvironmentRegularization = 1e-12;

/// delta_s_system = s_corr + s_env + q_term, exact when the register holds
/// the whole environment that has interacted.
struct EntropyDecomposition {
  int step = 0;
  double delta_s_system = 0.0;  ///< S(rho_S(n)) - S(rho_S(0))
  double s_corr = 0.0;          ///< I_SE(n) - I_SE(0)
  double s_env = 0.0;           ///< S(rho_E(n)|rho_E(0)) - S(rho_E(0)|rho_E(0))
  double q_term = 0.0;          ///< Tr (rho_E(n) - rho_E(0)) ln rho_E(0)
  double minus_delta_s_env = 0.0;  ///< S_E(0) - S_E(n); equals s_env + q_term
  bool regularized = false;        ///< rho_E(0) was singular
  std::optional<double> q_gibbs;   ///< -beta (<H_E>_n - <H_E>_0), Gibbs ancillas only

  double sum() const noexcept { return s_corr + s_env + q_term; }
  double discrepancy() const noexcept { return delta_s_system - sum(); }
};

/// Decomposes the entropy change of S for a register holding S and a set of
/// ancillas that all started in ancilla0. delta_s_system uses system_now, the
/// exact reduced state, so truncated registers show up as a discrepancy.
EntropyDecomposition decompose_entropy(const LabeledRegister& reg, int step,
                                       const DensityOperator& system0,
                                       const DensityOperator& system_now,
                                       const DensityOperator& ancilla0,
                                       const ModelConfig& cfg);

/// Decomposition for every step 0 .. cfg.steps.
std::vector<EntropyDecomposition> entropy_decomposition_series(const ModelConfig& cfg,
                                                               DecompositionSource source);

/// Decomposition after step n.
EntropyDecomposition entropy_decomposition(const ModelConfig& cfg, int n, DecompositionSource source);

struct HeatRecord {
  int step;
  double q_system;       ///< Tr[H_S (rho_S(0) - rho_S(n))]
  double q_environment;  ///< sum_k Tr[H_E (rho_{E_k}(0) - rho_{E_k}(n))]
};

/// Heat exchanged by S and by the ancillas for n = 0 .. cfg.steps. Ancillas
/// that left the register contribute their state at departure.
std::vector<HeatRecord> heat_series(const ModelConfig& cfg, SchemeId scheme = SchemeId::Embedded);

struct MemberAlignment {
  int sign = 1;                       ///< s in sign(dQ_S) = s * sign(dD)
  double agreement_fraction = 0.0;    ///< NaN when degenerate
  int counted_steps = 0;              ///< steps with |dQ_S| and |dD| above threshold
  bool degenerate = true;
  std::vector<double> heat_flux;      ///< Q_S(n+1) - Q_S(n)
};

/// Sign agreement between the system heat flux and the trace-distance
/// derivative. This is one formalisation of "aligned": the fixed sign s that
/// maximises agreement, and the fraction of informative steps that agree.
struct FluxAlignment {
  std::array<MemberAlignment, 2> members;
  std::vector<double> distance_derivative;  ///< D(n+1) - D(n)
  double agreement_fraction = 0.0;          ///< min over non-degenerate members
  bool degenerate = true;                   ///< both members degenerate
};

inline constexpr double kFluxThreshold = 1e-10;

/// Requires isotropic system-ancilla coupling and Gibbs ancillas; throws
/// UnsupportedConfiguration otherwise.
FluxAlignment flux_alignment(const ModelConfig& cfg, const StatePair& pair,
                             SchemeId scheme = SchemeId::Embedded);

}  // namespace cmsim
