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

// Collision-model dynamics. Five representations of the same reduced system
// evolution are provided:
//
//   FullChain  every ancilla kept in one register (exact, exponential cost)
//   EraseA     S|E_n correlations discarded right after each S-E_n collision
//   EraseB     oldest ancilla traced after its last AA collision (3 qubits)
//   EraseC     that trace postponed by one step (4 qubits)
//   Embedded   S plus d memory slots and d fresh slots; fresh states are
//              swapped into the memory each step (1 + 2d qubits)
//
// FullChain, EraseB, EraseC and Embedded give the same system state at every
// step. EraseA does not.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmsim/qcore.hpp"
#include "cmsim/register.hpp"

namespace cmsim {

enum class SchemeId { FullChain, EraseA, EraseB, EraseC, Embedded };

std::string_view to_string(SchemeId scheme);
/// Accepts the enumerator names (case-sensitive). Throws ArgumentError.
SchemeId parse_scheme(std::string_view name);

/// How each ancilla starts out.
struct AncillaInit {
  enum class Kind { Ground, Excited, Gibbs, Explicit };

  Kind kind = Kind::Ground;
  double beta = 0.0;
  std::optional<DensityOperator> state;

  static AncillaInit ground() { return {}; }
  static AncillaInit excited() { return {Kind::Excited, 0.0, std::nullopt}; }
  static AncillaInit gibbs(double beta) { return {Kind::Gibbs, beta, std::nullopt}; }
  static AncillaInit explicit_state(DensityOperator rho) { return {Kind::Explicit, 0.0, std::move(rho)}; }

  DensityOperator resolve(const QubitHamiltonianParams& h) const;
};

/// Window-relative ancilla-ancilla pair; 0 is the oldest ancilla of the
/// d + 1 ancillas that take part in a step's AA collisions.
using AncillaPair = std::pair<int, int>;

struct ModelConfig {
  CouplingTriple sa_coupling;
  CouplingTriple aa_coupling;
  double tau_sa = 0.0;
  double tau_aa = 0.0;
  int depth = 1;
  int steps = 1;
  double omega0 = 1.0;
  AncillaInit ancilla_init;
  DensityOperator system_init = DensityOperator::basis_state(2, 0);
  /// AA collision order override; empty means lexicographic (l, m), l < m.
  std::vector<AncillaPair> aa_order;
  std::size_t max_qubits = kDefaultMaxQubits;

  /// Throws ArgumentError naming the offending field.
  void validate() const;

  QubitHamiltonianParams hamiltonian() const { return {omega0}; }
  DensityOperator ancilla_state() const { return ancilla_init.resolve(hamiltonian()); }
  std::vector<AncillaPair> aa_pairs() const;
};

inline const Label kSystemLabel = "S";
/// "E<index>", ancillas counted from 1.
Label ancilla_label(int index);

enum class CollisionKind { SystemAncilla, AncillaAncilla };

struct Collision {
  CollisionKind kind;
  Label first;
  Label second;
  UnitaryOperator unitary;
};

/// Collisions of step n in the order they are applied: the AA collisions
/// among E_{(n-2)d+1} .. E_{(n-1)d+1} (none for n = 1), then the S-E_i
/// collisions for i = (n-1)d+1 .. nd.
std::vector<Collision> step_operator(const ModelConfig& cfg, int n);

struct AncillaState {
  int index;
  DensityOperator state;
};

struct TrajectoryStep {
  int step;
  DensityOperator system;
  std::optional<LabeledRegister> retained;
  /// Marginals of the ancillas held in the register after this step.
  std::vector<AncillaState> live;
  /// Ancillas that left the register during this step, in their final state.
  std::vector<AncillaState> departed;
};

struct Trajectory {
  std::string representation;
  std::vector<TrajectoryStep> steps;  // steps[0] is the initial state

  std::vector<DensityOperator> system_states() const;
};

struct EvolveOptions {
  bool keep_register = false;
  bool record_ancillas = false;
};

/// A representation advanced one step at a time. Exposed so that callers can
/// inspect or modify the retained register between steps.
class Representation {
 public:
  virtual ~Representation() = default;

  virtual std::string_view name() const = 0;

  int completed_steps() const noexcept { return step_; }
  void advance();

  const LabeledRegister& state() const noexcept { return reg_; }
  /// Swap in a different state on the same labels.
  void replace_state(LabeledRegister r);
  DensityOperator system() const;
  /// Physical ancilla index held by a register label.
  int ancilla_at(const Label& label) const;
  std::vector<AncillaState> live_ancillas() const;
  std::vector<AncillaState> take_departed();

 protected:
  Representation(const ModelConfig& cfg, LabeledRegister initial, int completed_steps);

  virtual void do_step(int n) = 0;

  const ModelConfig& config() const noexcept { return cfg_; }
  void append_fresh(const Label& label, int ancilla_index);
  void collide(CollisionKind kind, const Label& a, const Label& b);
  void apply(const LabelList& targets, const UnitaryOperator& u);
  /// Records the label's marginal as departed and traces it out.
  void retire(const Label& label);
  /// Swap unitary on two slots; the slots exchange their ancilla indices.
  void exchange(const Label& a, const Label& b);
  void assign(const Label& label, int ancilla_index);
  void set_state(LabeledRegister r) { reg_ = std::move(r); }

 private:
  ModelConfig cfg_;
  UnitaryOperator u_sa_;
  UnitaryOperator u_aa_;
  DensityOperator ancilla0_;
  LabeledRegister reg_;
  int step_ = 0;
  std::vector<std::pair<Label, int>> slots_;
  std::vector<AncillaState> departed_;
};

/// Validates cfg and builds the requested representation at step 0.
std::unique_ptr<Representation> make_representation(const ModelConfig& cfg, SchemeId scheme);

/// EraseB representation resumed from a retained (S, E_m) register after m
/// completed steps.
std::unique_ptr<Representation> resume_nested(const ModelConfig& cfg, LabeledRegister retained,
                                              int completed_steps);

/// S iterating over two ancillas only: step n uses E_a, a = ((n-1) mod 2) + 1,
/// preceded (n > 1) by the AA collision with the other ancilla. Nothing is
/// ever traced out. Requires depth 1.
std::unique_ptr<Representation> make_two_ancilla_toy(const ModelConfig& cfg);

/// EraseB that never traces ancilla `spectator`. After the ancilla's last AA
/// collision the retained (S, E_spectator) state equals the full-chain one.
/// Requires depth 1.
std::unique_ptr<Representation> make_spectator_chain(const ModelConfig& cfg, int spectator);

/// Runs a representation for cfg.steps steps and records every step.
Trajectory run(Representation& rep, int steps, const EvolveOptions& options = {});

/// Exact dynamics with all ancillas retained. Throws CapacityError when
/// 1 + depth * steps exceeds cfg.max_qubits.
Trajectory evolve_full_chain(const ModelConfig& cfg, const EvolveOptions& options = {});

/// EraseA, EraseB or EraseC. Throws UnsupportedConfiguration for depth > 1.
Trajectory evolve_scheme(const ModelConfig& cfg, SchemeId scheme, const EvolveOptions& options = {});

/// Memory-embedded representation. Throws UnsupportedConfiguration for depth > 2.
Trajectory evolve_embedded(const ModelConfig& cfg, const EvolveOptions& options = {});

Trajectory evolve(const ModelConfig& cfg, SchemeId scheme, const EvolveOptions& options = {});

}  // namespace cmsim
