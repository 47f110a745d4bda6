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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cmsim/qcore.hpp"

namespace cmsim {

using Label = std::string;
using LabelList = std::vector<Label>;

/// A multi-qubit state whose tensor factors carry names. The first label is
/// the most significant bit of a basis index.
class LabeledRegister {
 public:
  LabeledRegister(DensityOperator state, LabelList labels);

  const DensityOperator& state() const noexcept { return state_; }
  const LabelList& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }

  bool contains(std::string_view label) const noexcept;
  /// Index of label in labels(). Throws ArgumentError if absent.
  std::size_t position(std::string_view label) const;

  Matrix state_into_matrix() && { return std::move(state_).into_matrix(); }
  LabelList take_labels() && { return std::move(labels_); }

 private:
  DensityOperator state_;
  LabelList labels_;
};

/// Appends the factors of b after those of a. Labels must be disjoint.
LabeledRegister tensor_product(const LabeledRegister& a, const LabeledRegister& b,
                               std::size_t max_qubits = kDefaultMaxQubits);

/// Reduced state on keep; the result lists labels in register order.
LabeledRegister partial_trace(const LabeledRegister& r, const LabelList& keep);

/// Single-qubit reduced state of one label.
DensityOperator marginal(const LabeledRegister& r, std::string_view label);

/// Conjugates the state by u acting on targets (targets[0] is the most
/// significant qubit of u). Takes the register by value so that callers can
/// move into it and avoid a copy of large states.
LabeledRegister apply_on(LabeledRegister r, const LabelList& targets, const UnitaryOperator& u);

/// Replaces the state by rho_side (x) rho_rest, keeping the label order.
LabeledRegister decorrelate(const LabeledRegister& r, const LabelList& side);

/// S(side) + S(rest) - S(whole), in nats.
double mutual_information(const LabeledRegister& r, const LabelList& side);

}  // namespace cmsim
