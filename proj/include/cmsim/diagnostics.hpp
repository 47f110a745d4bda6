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

// Trace-distance and correlation diagnostics computed over trajectories.

#include <span>
#include <string>
#include <vector>

#include "cmsim/engine.hpp"

namespace cmsim {

/// Two initial system states evolved under identical collision sequences.
struct StatePair {
  DensityOperator first;
  DensityOperator second;
  std::string label;

  /// {|0>, |1>}
  static StatePair computational();
  /// {|+>, |->}
  static StatePair plus_minus();

  bool orthogonal() const;
};

struct SeriesRecord {
  int step;
  double value;
};

using Series = std::vector<SeriesRecord>;

std::vector<double> values(const Series& s);

/// Step-wise trace distance between two equally long state sequences.
Series distance_series(const std::vector<DensityOperator>& a, const std::vector<DensityOperator>& b);

/// Largest step-wise trace distance between two equally long state sequences.
double max_deviation(const std::vector<DensityOperator>& a, const std::vector<DensityOperator>& b);

/// D_n for n = 0 .. cfg.steps; cfg.system_init is replaced by each pair member.
Series distance_trajectory(const ModelConfig& cfg, SchemeId scheme, const StatePair& pair);

/// Sum of the positive increments D_{n+1} - D_n. Needs at least two values.
double blp_accumulation(std::span<const double> series);
double blp_accumulation(const Series& series);

/// Largest increment D_{n+1} - D_n (negative for a strictly decreasing series).
double max_increment(const Series& series);

struct MiProfile {
  Series last;      ///< I(S:E_n) after step n
  Series previous;  ///< I(S:E_{n-1}) after step n
};

/// Mutual information between S and its last two collision partners, sampled
/// after step n (before the next S-ancilla collision) for n = 2 .. n_max under
/// EraseC. Depth 1 only.
MiProfile mi_profile_last_ancillas(const ModelConfig& cfg, int n_max);

/// I(S:E_k) for n = 0 .. n_max. Zero while E_k has not collided. Depth 1 runs
/// keep E_k beside the EraseB register, which is exact because E_k is never
/// touched after its AA collision. Deeper memories use the full chain and
/// are bounded by cfg.max_qubits.
Series mi_profile_fixed_ancilla(const ModelConfig& cfg, int k, int n_max);

}  // namespace cmsim
