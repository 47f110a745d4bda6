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

#include "cmsim/diagnostics.hpp"
#include "cmsim/errors.hpp"

namespace cmsim {

StatePair StatePair::computational() {
  return {DensityOperator::basis_state(2, 0), DensityOperator::basis_state(2, 1), "0|1"};
}

StatePair StatePair::plus_minus() {
  return {DensityOperator::from_bloch(1, 0, 0), DensityOperator::from_bloch(-1, 0, 0), "+|-"};
}

bool StatePair::orthogonal() const { return std::abs(trace_distance(first, second) - 1.0) < 1e-12; }

std::vector<double> values(const Series& s) {
  std::vector<double> out;
  out.reserve(s.size());
  for (const auto& r : s) out.push_back(r.value);
  return out;
}

Series distance_series(const std::vector<DensityOperator>& a, const std::vector<DensityOperator>& b) {
  if (a.size() != b.size()) throw ArgumentError("state sequences differ in length");
  Series out;
  out.reserve(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    out.push_back({static_cast<int>(n), trace_distance(a[n], b[n])});
  }
  return out;
}

double max_deviation(const std::vector<DensityOperator>& a, const std::vector<DensityOperator>& b) {
  double worst = 0.0;
  for (const auto& r : distance_series(a, b)) worst = std::max(worst, r.value);
  return worst;
}

Series distance_trajectory(const ModelConfig& cfg, SchemeId scheme, const StatePair& pair) {
  ModelConfig first = cfg;
  first.system_init = pair.first;
  ModelConfig second = cfg;
  second.system_init = pair.second;
  return distance_series(evolve(first, scheme).system_states(),
                         evolve(second, scheme).system_states());
}

double blp_accumulation(std::span<const double> series) {
  if (series.size() < 2) throw ArgumentError("BLP accumulation needs at least two values");
  double acc = 0.0;
  for (std::size_t n = 0; n + 1 < series.size(); ++n) acc += std::max(series[n + 1] - series[n], 0.0);
  return acc;
}

double blp_accumulation(const Series& series) {
  const auto v = values(series);
  return blp_accumulation(std::span<const double>(v));
}

double max_increment(const Series& series) {
  if (series.size() < 2) throw ArgumentError("increment needs at least two values");
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n + 1 < series.size(); ++n) {
    best = std::max(best, series[n + 1].value - series[n].value);
  }
  return best;
}

namespace {

double pair_information(const LabeledRegister& reg, const Label& ancilla) {
  return mutual_information(partial_trace(reg, {kSystemLabel, ancilla}), {kSystemLabel});
}

}  // namespace

MiProfile mi_profile_last_ancillas(const ModelConfig& cfg, int n_max) {
  if (n_max < 0) throw ArgumentError("n_max must be >= 0");
  auto rep = make_representation(cfg, SchemeId::EraseC);
  MiProfile out;
  for (int n = 1; n <= n_max; ++n) {
    rep->advance();
    if (n < 2) continue;
    out.last.push_back({n, pair_information(rep->state(), ancilla_label(n))});
    out.previous.push_back({n, pair_information(rep->state(), ancilla_label(n - 1))});
  }
  return out;
}

Series mi_profile_fixed_ancilla(const ModelConfig& cfg, int k, int n_max) {
  if (k < 1) throw ArgumentError("ancilla index must be >= 1");
  if (n_max < 0) throw ArgumentError("n_max must be >= 0");
  std::unique_ptr<Representation> rep;
  if (cfg.depth == 1) {
    rep = make_spectator_chain(cfg, k);
  } else {
    ModelConfig sized = cfg;
    sized.steps = n_max;
    rep = make_representation(sized, SchemeId::FullChain);
  }
  const Label target = ancilla_label(k);
  Series out{{0, 0.0}};
  for (int n = 1; n <= n_max; ++n) {
    rep->advance();
    const double info = rep->state().contains(target) ? pair_information(rep->state(), target) : 0.0;
    out.push_back({n, info});
  }
  return out;
}

}  // namespace cmsim
