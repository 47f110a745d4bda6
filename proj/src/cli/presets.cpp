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

#include <functional>
#include <map>
#include <numbers>

#include "cmsim/cli.hpp"
#include "cmsim/errors.hpp"

namespace cmsim::cli {

namespace {

constexpr double kStrongAa = 0.95 * std::numbers::pi / 2.0;

// Jx = 2 Jy = Jz = 1 on both collision kinds.
ModelConfig anisotropic_model(int steps) {
  ModelConfig m;
  m.sa_coupling = {1.0, 0.5, 1.0};
  m.aa_coupling = {1.0, 0.5, 1.0};
  m.tau_sa = 0.05;
  m.tau_aa = kStrongAa;
  m.steps = steps;
  m.ancilla_init = AncillaInit::ground();
  return m;
}

// Partial-SWAP collisions.
ModelConfig isotropic_model(int steps, double tau_aa) {
  ModelConfig m;
  m.sa_coupling = {1.0, 1.0, 1.0};
  m.aa_coupling = {1.0, 1.0, 1.0};
  m.tau_sa = 0.05;
  m.tau_aa = tau_aa;
  m.steps = steps;
  m.ancilla_init = AncillaInit::ground();
  m.system_init = DensityOperator::basis_state(2, 1);
  return m;
}

RunSpec distance_preset(SchemeId first, std::optional<SchemeId> second, const char* out) {
  RunSpec r;
  r.experiment = Experiment::Distance;
  r.model = anisotropic_model(300);
  r.schemes = {first};
  if (second) r.schemes.push_back(*second);
  r.pairs = {StatePair::computational(), StatePair::plus_minus()};
  r.output = out;
  return r;
}

RunSpec mi_preset(MiMode mode, int steps, std::vector<int> ancillas, const char* out) {
  RunSpec r;
  r.experiment = Experiment::MiProfile;
  r.model = anisotropic_model(steps);
  r.model.system_init = DensityOperator::from_bloch(1.0, 0.0, 0.0);
  r.mi_mode = mode;
  r.fixed_ancillas = std::move(ancillas);
  r.output = out;
  return r;
}

RunSpec thermo_preset(int steps, double tau_aa, std::vector<DecompositionSource> sources, const char* out) {
  RunSpec r;
  r.experiment = Experiment::ThermoDecomposition;
  r.model = isotropic_model(steps, tau_aa);
  r.sources = std::move(sources);
  r.output = out;
  return r;
}

const std::map<std::string, std::function<RunSpec()>, std::less<>>& registry() {
  using S = DecompositionSource;
  static const std::map<std::string, std::function<RunSpec()>, std::less<>> presets{
      {"fig2a", [] { return distance_preset(SchemeId::EraseA, std::nullopt, "fig2a.csv"); }},
      {"fig2b", [] { return distance_preset(SchemeId::EraseB, SchemeId::EraseC, "fig2b.csv"); }},
      {"fig3a", [] { return mi_preset(MiMode::LastAncillas, 300, {}, "fig3a.csv"); }},
      {"fig3b", [] { return mi_preset(MiMode::FixedAncilla, 400, {1, 25, 100, 250}, "fig3b.csv"); }},
      {"fig5", [] { return thermo_preset(100, kStrongAa, {S::TwoAncillaToy}, "fig5.csv"); }},
      {"fig8a", [] { return thermo_preset(200, kStrongAa, {S::EraseB, S::EraseC}, "fig8a.csv"); }},
      {"fig8b", [] { return thermo_preset(200, 0.0, {S::EraseB, S::EraseC}, "fig8b.csv"); }},
      {"fig7",
       [] {
         RunSpec r;
         r.experiment = Experiment::HeatFlux;
         r.model = isotropic_model(300, kStrongAa);
         r.model.ancilla_init = AncillaInit::gibbs(1.0);
         r.model.system_init = DensityOperator::basis_state(2, 0);
         r.pairs = {StatePair::computational()};
         r.output = "fig7.csv";
         return r;
       }},
  };
  return presets;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig2a", "fig2b", "fig3a", "fig3b", "fig5", "fig8a", "fig8b", "fig7"};
}

RunSpec preset(std::string_view name) {
  const auto& reg = registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw ArgumentError("unknown preset '" + std::string(name) + "'");
  return it->second();
}

}  // namespace cmsim::cli
