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

namespace {

TrajectoryStep snapshot(Representation& rep, const EvolveOptions& options) {
  TrajectoryStep s{rep.completed_steps(), rep.system(), std::nullopt, {}, {}};
  if (options.keep_register) s.retained = rep.state();
  auto departed = rep.take_departed();
  if (options.record_ancillas) {
    s.live = rep.live_ancillas();
    s.departed = std::move(departed);
  }
  return s;
}

}  // namespace

Trajectory run(Representation& rep, int steps, const EvolveOptions& options) {
  if (steps < 0) throw ArgumentError("step count must be >= 0");
  Trajectory t{std::string(rep.name()), {}};
  t.steps.reserve(static_cast<std::size_t>(steps) + 1);
  t.steps.push_back(snapshot(rep, options));
  for (int n = 0; n < steps; ++n) {
    rep.advance();
    t.steps.push_back(snapshot(rep, options));
  }
  return t;
}

Trajectory evolve_full_chain(const ModelConfig& cfg, const EvolveOptions& options) {
  auto rep = make_representation(cfg, SchemeId::FullChain);
  return run(*rep, cfg.steps, options);
}

Trajectory evolve_scheme(const ModelConfig& cfg, SchemeId scheme, const EvolveOptions& options) {
  if (scheme != SchemeId::EraseA && scheme != SchemeId::EraseB && scheme != SchemeId::EraseC) {
    throw ArgumentError("evolve_scheme takes EraseA, EraseB or EraseC");
  }
  auto rep = make_representation(cfg, scheme);
  return run(*rep, cfg.steps, options);
}

Trajectory evolve_embedded(const ModelConfig& cfg, const EvolveOptions& options) {
  auto rep = make_representation(cfg, SchemeId::Embedded);
  return run(*rep, cfg.steps, options);
}

Trajectory evolve(const ModelConfig& cfg, SchemeId scheme, const EvolveOptions& options) {
  auto rep = make_representation(cfg, scheme);
  return run(*rep, cfg.steps, options);
}

}  // namespace cmsim
