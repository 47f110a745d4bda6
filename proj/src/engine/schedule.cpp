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

#include "cmsim/engine.hpp"
#include "cmsim/errors.hpp"

namespace cmsim {

std::vector<Collision> step_operator(const ModelConfig& cfg, int n) {
  if (n < 1) throw ArgumentError("step index must be >= 1");
  cfg.validate();
  const int d = cfg.depth;
  std::vector<Collision> out;
  if (n > 1) {
    const auto u_aa = collision_unitary(cfg.aa_coupling, cfg.tau_aa);
    const int first = (n - 2) * d + 1;
    for (const auto& [l, m] : cfg.aa_pairs()) {
      out.push_back({CollisionKind::AncillaAncilla, ancilla_label(first + l),
                     ancilla_label(first + m), u_aa});
    }
  }
  const auto u_sa = collision_unitary(cfg.sa_coupling, cfg.tau_sa);
  for (int i = (n - 1) * d + 1; i <= n * d; ++i) {
    out.push_back({CollisionKind::SystemAncilla, kSystemLabel, ancilla_label(i), u_sa});
  }
  return out;
}

}  // namespace cmsim
