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
#include <unordered_set>

#include "cmsim/errors.hpp"
#include "cmsim/register.hpp"

namespace cmsim {

namespace {

using Index = Eigen::Index;

// Basis-index offsets obtained by spreading the bits of m = 0 .. 2^k - 1 onto
// the given qubit positions of an n-qubit register (positions[0] receives the
// most significant bit of m).
std::vector<Index> spread_offsets(std::size_t n, const std::vector<std::size_t>& positions) {
  const std::size_t k = positions.size();
  std::vector<Index> out(std::size_t{1} << k, 0);
  for (std::size_t m = 0; m < out.size(); ++m) {
    Index full = 0;
    for (std::size_t b = 0; b < k; ++b) {
      if ((m >> (k - 1 - b)) & 1U) full |= Index{1} << (n - 1 - positions[b]);
    }
    out[m] = full;
  }
  return out;
}

std::vector<std::size_t> resolve(const LabeledRegister& r, const LabelList& labels) {
  std::vector<std::size_t> pos;
  pos.reserve(labels.size());
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw ArgumentError("duplicate label '" + l + "'");
    pos.push_back(r.position(l));
  }
  return pos;
}

std::vector<std::size_t> complement(std::size_t n, std::vector<std::size_t> pos) {
  std::sort(pos.begin(), pos.end());
  std::vector<std::size_t> rest;
  for (std::size_t q = 0; q < n; ++q) {
    if (!std::binary_search(pos.begin(), pos.end(), q)) rest.push_back(q);
  }
  return rest;
}

Matrix reduce(const Matrix& rho, std::size_t n, std::vector<std::size_t> keep_sorted) {
  const auto kept = spread_offsets(n, keep_sorted);
  const auto traced = spread_offsets(n, complement(n, keep_sorted));
  const auto dk = static_cast<Index>(kept.size());
  Matrix out = Matrix::Zero(dk, dk);
  for (Index b = 0; b < dk; ++b) {
    for (Index a = 0; a < dk; ++a) {
      Complex acc = 0.0;
      for (const Index t : traced) acc += rho(kept[a] | t, kept[b] | t);
      out(a, b) = acc;
    }
  }
  return out;
}

void require_bipartition(const LabeledRegister& r, const LabelList& side) {
  if (side.empty() || side.size() >= r.size()) {
    throw ArgumentError("cut must be a non-empty proper subset of the register labels");
  }
}

}  // namespace

LabeledRegister::LabeledRegister(DensityOperator state, LabelList labels)
    : state_(std::move(state)), labels_(std::move(labels)) {
  if (state_.dim() != (std::size_t{1} << labels_.size())) {
    throw ArgumentError("register has " + std::to_string(labels_.size()) +
                        " labels but state dimension " + std::to_string(state_.dim()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw ArgumentError("duplicate label '" + l + "'");
  }
}

bool LabeledRegister::contains(std::string_view label) const noexcept {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t LabeledRegister::position(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ArgumentError("unknown label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

LabeledRegister tensor_product(const LabeledRegister& a, const LabeledRegister& b,
                               std::size_t max_qubits) {
  LabelList labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return LabeledRegister(tensor_product(a.state(), b.state(), max_qubits), std::move(labels));
}

LabeledRegister partial_trace(const LabeledRegister& r, const LabelList& keep) {
  if (keep.empty()) throw ArgumentError("partial trace must keep at least one label");
  auto pos = resolve(r, keep);
  std::sort(pos.begin(), pos.end());
  LabelList labels;
  for (const auto p : pos) labels.push_back(r.labels()[p]);
  if (pos.size() == r.size()) return LabeledRegister(r.state(), std::move(labels));
  return LabeledRegister(DensityOperator::trusted(reduce(r.state().matrix(), r.size(), pos)),
                         std::move(labels));
}

DensityOperator marginal(const LabeledRegister& r, std::string_view label) {
  return partial_trace(r, {Label(label)}).state();
}

LabeledRegister apply_on(LabeledRegister r, const LabelList& targets, const UnitaryOperator& u) {
  if (targets.empty()) throw ArgumentError("apply_on needs at least one target");
  if (u.dim() != (std::size_t{1} << targets.size())) {
    throw ArgumentError("unitary of dimension " + std::to_string(u.dim()) + " cannot act on " +
                        std::to_string(targets.size()) + " qubits");
  }
  const std::size_t n = r.size();
  const auto pos = resolve(r, targets);
  const auto local = spread_offsets(n, pos);
  const auto bases = spread_offsets(n, complement(n, pos));
  const Matrix& um = u.matrix();
  const auto k = static_cast<Index>(local.size());

  Matrix m = std::move(r).state_into_matrix();
  const Index dim = m.rows();
  Vector in(k), out(k);
  // rho -> U rho
  for (Index c = 0; c < dim; ++c) {
    for (const Index base : bases) {
      for (Index j = 0; j < k; ++j) in(j) = m(base | local[j], c);
      out.noalias() = um * in;
      for (Index j = 0; j < k; ++j) m(base | local[j], c) = out(j);
    }
  }
  // rho -> rho U^dagger
  const Matrix uc = um.conjugate();
  for (const Index base : bases) {
    for (Index row = 0; row < dim; ++row) {
      for (Index j = 0; j < k; ++j) in(j) = m(row, base | local[j]);
      out.noalias() = uc * in;
      for (Index j = 0; j < k; ++j) m(row, base | local[j]) = out(j);
    }
  }
  return LabeledRegister(DensityOperator::trusted(std::move(m)), std::move(r).take_labels());
}

LabeledRegister decorrelate(const LabeledRegister& r, const LabelList& side) {
  require_bipartition(r, side);
  const std::size_t n = r.size();
  auto pos_a = resolve(r, side);
  std::sort(pos_a.begin(), pos_a.end());
  const auto pos_b = complement(n, pos_a);
  const Matrix rho_a = reduce(r.state().matrix(), n, pos_a);
  const Matrix rho_b = reduce(r.state().matrix(), n, pos_b);
  const auto off_a = spread_offsets(n, pos_a);
  const auto off_b = spread_offsets(n, pos_b);
  const auto dim = static_cast<Index>(r.state().dim());
  Matrix out(dim, dim);
  for (Index ja = 0; ja < static_cast<Index>(off_a.size()); ++ja) {
    for (Index jb = 0; jb < static_cast<Index>(off_b.size()); ++jb) {
      const Index col = off_a[ja] | off_b[jb];
      for (Index ia = 0; ia < static_cast<Index>(off_a.size()); ++ia) {
        for (Index ib = 0; ib < static_cast<Index>(off_b.size()); ++ib) {
          out(off_a[ia] | off_b[ib], col) = rho_a(ia, ja) * rho_b(ib, jb);
        }
      }
    }
  }
  // Both marginals carry the trace of r; without renormalising, repeated
  // decorrelation squares any trace error every step.
  out /= r.state().matrix().trace().real();
  return LabeledRegister(DensityOperator::trusted(std::move(out)), r.labels());
}

double mutual_information(const LabeledRegister& r, const LabelList& side) {
  require_bipartition(r, side);
  const std::size_t n = r.size();
  auto pos_a = resolve(r, side);
  std::sort(pos_a.begin(), pos_a.end());
  const auto pos_b = complement(n, pos_a);
  const auto s_a = von_neumann_entropy(DensityOperator::trusted(reduce(r.state().matrix(), n, pos_a)));
  const auto s_b = von_neumann_entropy(DensityOperator::trusted(reduce(r.state().matrix(), n, pos_b)));
  return s_a + s_b - von_neumann_entropy(r.state());
}

}  // namespace cmsim
