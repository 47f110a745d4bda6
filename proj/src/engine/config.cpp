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
#include <set>

#include "cmsim/engine.hpp"
#include "cmsim/errors.hpp"

namespace cmsim {

namespace {

void require(bool ok, const std::string& field, const std::string& why) {
  if (!ok) throw ArgumentError("invalid model config: " + field + " " + why);
}

bool finite(const CouplingTriple& j) {
  return std::isfinite(j.jx) && std::isfinite(j.jy) && std::isfinite(j.jz);
}

}  // namespace

std::string_view to_string(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::FullChain: return "FullChain";
    case SchemeId::EraseA: return "EraseA";
    case SchemeId::EraseB: return "EraseB";
    case SchemeId::EraseC: return "EraseC";
    case SchemeId::Embedded: return "Embedded";
  }
  return "?";
}

SchemeId parse_scheme(std::string_view name) {
  for (const auto s : {SchemeId::FullChain, SchemeId::EraseA, SchemeId::EraseB, SchemeId::EraseC,
                       SchemeId::Embedded}) {
    if (to_string(s) == name) return s;
  }
  throw ArgumentError("unknown scheme '" + std::string(name) + "'");
}

DensityOperator AncillaInit::resolve(const QubitHamiltonianParams& h) const {
  switch (kind) {
    case Kind::Ground: return DensityOperator::basis_state(2, 0);
    case Kind::Excited: return DensityOperator::basis_state(2, 1);
    case Kind::Gibbs: return gibbs_qubit(beta, h);
    case Kind::Explicit:
      if (!state || state->dim() != 2) throw ArgumentError("explicit ancilla state must be a qubit");
      return *state;
  }
  throw ArgumentError("unknown ancilla initialisation");
}

void ModelConfig::validate() const {
  require(finite(sa_coupling), "sa_coupling", "must be finite");
  require(finite(aa_coupling), "aa_coupling", "must be finite");
  require(std::isfinite(tau_sa) && tau_sa >= 0.0, "tau_sa", "must be finite and >= 0");
  require(std::isfinite(tau_aa) && tau_aa >= 0.0, "tau_aa", "must be finite and >= 0");
  require(depth >= 1, "depth", "must be >= 1");
  require(steps >= 0, "steps", "must be >= 0");
  require(std::isfinite(omega0), "omega0", "must be finite");
  require(system_init.dim() == 2, "system_init", "must be a single-qubit state");
  require(max_qubits >= 2, "max_qubits", "must be >= 2");
  if (ancilla_init.kind == AncillaInit::Kind::Gibbs) {
    require(std::isfinite(ancilla_init.beta) && ancilla_init.beta >= 0.0, "ancilla_init",
            "inverse temperature must be finite and >= 0");
  }
  if (ancilla_init.kind == AncillaInit::Kind::Explicit) {
    require(ancilla_init.state.has_value() && ancilla_init.state->dim() == 2, "ancilla_init",
            "explicit state must be a single-qubit density operator");
  }
  std::set<AncillaPair> seen;
  for (const auto& [l, m] : aa_order) {
    require(0 <= l && l < m && m <= depth, "aa_order",
            "pairs must satisfy 0 <= l < m <= depth (window-relative)");
    require(seen.insert({l, m}).second, "aa_order", "contains a repeated pair");
  }
}

std::vector<AncillaPair> ModelConfig::aa_pairs() const {
  if (!aa_order.empty()) return aa_order;
  std::vector<AncillaPair> pairs;
  for (int l = 0; l <= depth; ++l) {
    for (int m = l + 1; m <= depth; ++m) pairs.emplace_back(l, m);
  }
  return pairs;
}

Label ancilla_label(int index) { return "E" + std::to_string(index); }

std::vector<DensityOperator> Trajectory::system_states() const {
  std::vector<DensityOperator> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.system);
  return out;
}

}  // namespace cmsim
