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
#include <utility>

#include "cmsim/engine.hpp"
#include "cmsim/errors.hpp"

namespace cmsim {

namespace {

LabeledRegister system_register(const ModelConfig& cfg) {
  return LabeledRegister(cfg.system_init, {kSystemLabel});
}

const ModelConfig& validated(const ModelConfig& cfg) {
  cfg.validate();
  return cfg;
}

// All ancillas in one register, grown as ancillas first take part.
class FullChain final : public Representation {
 public:
  explicit FullChain(const ModelConfig& cfg)
      : Representation(validated(cfg), system_register(cfg), 0) {
    const auto needed = 1 + static_cast<std::size_t>(cfg.depth) * static_cast<std::size_t>(cfg.steps);
    if (needed > cfg.max_qubits) throw capacity_error(cfg);
  }

  std::string_view name() const override { return "FullChain"; }

 protected:
  void do_step(int n) override {
    const auto& cfg = config();
    const int d = cfg.depth;
    if (1 + static_cast<std::size_t>(d) * static_cast<std::size_t>(n) > cfg.max_qubits) {
      throw capacity_error(cfg);
    }
    for (int i = (n - 1) * d + 1; i <= n * d; ++i) append_fresh(ancilla_label(i), i);
    for (const auto& c : step_operator(cfg, n)) apply({c.first, c.second}, c.unitary);
  }

 private:
  static CapacityError capacity_error(const ModelConfig& cfg) {
    const int feasible = static_cast<int>((cfg.max_qubits - 1) / static_cast<std::size_t>(cfg.depth));
    return CapacityError("full chain with depth " + std::to_string(cfg.depth) + " and " +
                             std::to_string(cfg.steps) + " steps exceeds the " +
                             std::to_string(cfg.max_qubits) +
                             "-qubit register capacity; at most " + std::to_string(feasible) +
                             " steps are feasible",
                         feasible);
  }
};

void require_depth_one(const ModelConfig& cfg, std::string_view what) {
  if (cfg.depth != 1) {
    throw UnsupportedConfiguration(std::string(what) + " is defined for depth 1 only (got depth " +
                                   std::to_string(cfg.depth) + ")");
  }
}

// Nearest-neighbour chain where ancilla E_{n - lag} is traced once E_n has
// collided with its predecessor. lag = 1 is EraseB, lag = 2 is EraseC.
// A spectator ancilla, if given, is never traced.
class NestedChain : public Representation {
 public:
  NestedChain(const ModelConfig& cfg, int lag, bool erase_after_sa, std::string_view name,
              int spectator = 0)
      : Representation(validated(cfg), system_register(cfg), 0),
        lag_(lag),
        erase_after_sa_(erase_after_sa),
        spectator_(spectator),
        name_(name) {
    require_depth_one(cfg, name);
  }

  NestedChain(const ModelConfig& cfg, LabeledRegister retained, int completed)
      : Representation(validated(cfg), std::move(retained), completed),
        lag_(1),
        erase_after_sa_(false),
        spectator_(0),
        name_("EraseB") {
    require_depth_one(cfg, name_);
  }

  std::string_view name() const override { return name_; }

 protected:
  void do_step(int n) override {
    const Label current = ancilla_label(n);
    append_fresh(current, n);
    if (n > 1) {
      collide(CollisionKind::AncillaAncilla, ancilla_label(n - 1), current);
      const int oldest = n - lag_;
      if (oldest >= 1 && oldest != spectator_ && state().contains(ancilla_label(oldest))) {
        retire(ancilla_label(oldest));
      }
    }
    collide(CollisionKind::SystemAncilla, kSystemLabel, current);
    if (erase_after_sa_) set_state(decorrelate(state(), {kSystemLabel}));
  }

 private:
  int lag_;
  bool erase_after_sa_;
  int spectator_;
  std::string name_;
};

// S + d memory slots M_i + d fresh slots F_i. Per step: AA collisions among
// (M_1 .. M_d, F_1), swap M_i <-> F_i, retire and refresh every F_i, then
// S-M_i collisions.
class Embedded final : public Representation {
 public:
  explicit Embedded(const ModelConfig& cfg)
      : Representation(validated(cfg), system_register(cfg), 0) {
    if (cfg.depth > 2) {
      throw UnsupportedConfiguration("embedded representation supports depth 1 and 2 (got depth " +
                                     std::to_string(cfg.depth) + ")");
    }
    const int d = cfg.depth;
    for (int i = 1; i <= d; ++i) append_fresh(memory(i), i);
    for (int i = 1; i <= d; ++i) append_fresh(fresh(i), d + i);
  }

  std::string_view name() const override { return "Embedded"; }

 protected:
  void do_step(int n) override {
    const int d = config().depth;
    if (n > 1) {
      LabelList window;
      for (int i = 1; i <= d; ++i) window.push_back(memory(i));
      window.push_back(fresh(1));
      for (const auto& [l, m] : config().aa_pairs()) {
        collide(CollisionKind::AncillaAncilla, window[static_cast<std::size_t>(l)],
                window[static_cast<std::size_t>(m)]);
      }
      for (int i = 1; i <= d; ++i) exchange(memory(i), fresh(i));
      for (int i = 1; i <= d; ++i) retire(fresh(i));
      for (int i = 1; i <= d; ++i) append_fresh(fresh(i), n * d + i);
    }
    for (int i = 1; i <= d; ++i) collide(CollisionKind::SystemAncilla, kSystemLabel, memory(i));
  }

 private:
  static Label memory(int i) { return "M" + std::to_string(i); }
  static Label fresh(int i) { return "F" + std::to_string(i); }
};

class TwoAncillaToy final : public Representation {
 public:
  explicit TwoAncillaToy(const ModelConfig& cfg)
      : Representation(validated(cfg), system_register(cfg), 0) {
    require_depth_one(cfg, "two-ancilla toy model");
    append_fresh(ancilla_label(1), 1);
    append_fresh(ancilla_label(2), 2);
  }

  std::string_view name() const override { return "TwoAncillaToy"; }

 protected:
  void do_step(int n) override {
    const Label current = ancilla_label((n - 1) % 2 + 1);
    if (n > 1) collide(CollisionKind::AncillaAncilla, ancilla_label(n % 2 + 1), current);
    collide(CollisionKind::SystemAncilla, kSystemLabel, current);
  }
};

}  // namespace

Representation::Representation(const ModelConfig& cfg, LabeledRegister initial, int completed_steps)
    : cfg_(cfg),
      u_sa_(collision_unitary(cfg.sa_coupling, cfg.tau_sa)),
      u_aa_(collision_unitary(cfg.aa_coupling, cfg.tau_aa)),
      ancilla0_(cfg.ancilla_state()),
      reg_(std::move(initial)),
      step_(completed_steps) {
  if (!reg_.contains(kSystemLabel)) throw ArgumentError("register must contain the system label");
  for (const auto& label : reg_.labels()) {
    if (label == kSystemLabel) continue;
    if (label.size() < 2 || label[0] != 'E') {
      throw ArgumentError("cannot infer the ancilla index of label '" + label + "'");
    }
    slots_.emplace_back(label, std::stoi(label.substr(1)));
  }
}

void Representation::advance() {
  do_step(step_ + 1);
  ++step_;
}

void Representation::replace_state(LabeledRegister r) {
  if (r.labels() != reg_.labels()) throw ArgumentError("replacement register has different labels");
  reg_ = std::move(r);
}

DensityOperator Representation::system() const { return marginal(reg_, kSystemLabel); }

int Representation::ancilla_at(const Label& label) const {
  for (const auto& [l, idx] : slots_) {
    if (l == label) return idx;
  }
  throw ArgumentError("label '" + label + "' does not hold an ancilla");
}

std::vector<AncillaState> Representation::live_ancillas() const {
  std::vector<AncillaState> out;
  for (const auto& [label, idx] : slots_) out.push_back({idx, marginal(reg_, label)});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  return out;
}

std::vector<AncillaState> Representation::take_departed() { return std::exchange(departed_, {}); }

void Representation::append_fresh(const Label& label, int ancilla_index) {
  reg_ = tensor_product(reg_, LabeledRegister(ancilla0_, {label}), cfg_.max_qubits);
  slots_.emplace_back(label, ancilla_index);
}

void Representation::collide(CollisionKind kind, const Label& a, const Label& b) {
  apply({a, b}, kind == CollisionKind::SystemAncilla ? u_sa_ : u_aa_);
}

void Representation::apply(const LabelList& targets, const UnitaryOperator& u) {
  reg_ = apply_on(std::move(reg_), targets, u);
}

void Representation::retire(const Label& label) {
  departed_.push_back({ancilla_at(label), marginal(reg_, label)});
  LabelList keep;
  for (const auto& l : reg_.labels()) {
    if (l != label) keep.push_back(l);
  }
  reg_ = partial_trace(reg_, keep);
  std::erase_if(slots_, [&](const auto& s) { return s.first == label; });
}

void Representation::exchange(const Label& a, const Label& b) {
  apply({a, b}, swap_unitary());
  const int ia = ancilla_at(a);
  const int ib = ancilla_at(b);
  assign(a, ib);
  assign(b, ia);
}

void Representation::assign(const Label& label, int ancilla_index) {
  for (auto& [l, idx] : slots_) {
    if (l == label) {
      idx = ancilla_index;
      return;
    }
  }
  slots_.emplace_back(label, ancilla_index);
}

std::unique_ptr<Representation> make_representation(const ModelConfig& cfg, SchemeId scheme) {
  switch (scheme) {
    case SchemeId::FullChain: return std::make_unique<FullChain>(cfg);
    case SchemeId::EraseA: return std::make_unique<NestedChain>(cfg, 1, true, "EraseA");
    case SchemeId::EraseB: return std::make_unique<NestedChain>(cfg, 1, false, "EraseB");
    case SchemeId::EraseC: return std::make_unique<NestedChain>(cfg, 2, false, "EraseC");
    case SchemeId::Embedded: return std::make_unique<Embedded>(cfg);
  }
  throw ArgumentError("unknown scheme");
}

std::unique_ptr<Representation> resume_nested(const ModelConfig& cfg, LabeledRegister retained,
                                              int completed_steps) {
  if (completed_steps < 1) throw ArgumentError("resume_nested needs at least one completed step");
  if (retained.labels() != LabelList{kSystemLabel, ancilla_label(completed_steps)}) {
    throw ArgumentError("retained register must hold (S, E_m) after m steps");
  }
  return std::make_unique<NestedChain>(cfg, std::move(retained), completed_steps);
}

std::unique_ptr<Representation> make_two_ancilla_toy(const ModelConfig& cfg) {
  return std::make_unique<TwoAncillaToy>(cfg);
}

std::unique_ptr<Representation> make_spectator_chain(const ModelConfig& cfg, int spectator) {
  if (spectator < 1) throw ArgumentError("spectator ancilla index must be >= 1");
  return std::make_unique<NestedChain>(cfg, 1, false, "SpectatorChain", spectator);
}

}  // namespace cmsim
