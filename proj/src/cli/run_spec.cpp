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
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "cmsim/cli.hpp"
#include "cmsim/errors.hpp"

namespace cmsim::cli {

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::Distance: return "distance";
    case Experiment::MiProfile: return "mi-profile";
    case Experiment::ThermoDecomposition: return "thermo-decomposition";
    case Experiment::HeatFlux: return "heat-flux";
    case Experiment::EmbedCheck: return "embed-check";
    case Experiment::SchemeCompare: return "scheme-compare";
  }
  return "?";
}

Experiment parse_experiment(std::string_view name) {
  for (const auto e : {Experiment::Distance, Experiment::MiProfile, Experiment::ThermoDecomposition,
                       Experiment::HeatFlux, Experiment::EmbedCheck, Experiment::SchemeCompare}) {
    if (to_string(e) == name) return e;
  }
  throw ArgumentError("unknown experiment '" + std::string(name) + "'");
}

namespace {

struct NamedState {
  std::string_view token;
  std::array<double, 3> bloch;
};

constexpr std::array<NamedState, 7> kNamedStates{{
    {"0", {0, 0, 1}},
    {"1", {0, 0, -1}},
    {"+", {1, 0, 0}},
    {"-", {-1, 0, 0}},
    {"+i", {0, 1, 0}},
    {"-i", {0, -1, 0}},
    {"mixed", {0, 0, 0}},
}};

std::string trim(std::string_view s) {
  const auto* ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? s.npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

double parse_factor(const std::string& tok) {
  if (tok == "pi") return std::numbers::pi;
  double v = 0.0;
  const char* first = tok.data();
  const char* last = first + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  const auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last || first == last) {
    throw ArgumentError("'" + tok + "' is not a number");
  }
  return v;
}

// A real number, or a product/quotient of numbers and `pi` such as 0.95*pi/2.
double parse_real(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw ArgumentError("expected a number");
  double value = 1.0;
  char op = '*';
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '*' || s[i] == '/') {
      const double f = parse_factor(trim(std::string_view(s).substr(start, i - start)));
      value = op == '*' ? value * f : value / f;
      if (i < s.size()) op = s[i];
      start = i + 1;
    }
  }
  return value;
}

int parse_int(std::string_view text) {
  const std::string s = trim(text);
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw ArgumentError("'" + s + "' is not an integer");
  }
  return v;
}

std::string real_token(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CouplingTriple parse_coupling(std::string_view text) {
  const auto parts = split_ws(text);
  if (parts.size() == 1) {
    const double j = parse_real(parts[0]);
    return {j, j, j};
  }
  if (parts.size() != 3) throw ArgumentError("expected one value or three values 'Jx Jy Jz'");
  return {parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2])};
}

DensityOperator parse_state(std::string_view text) {
  const std::string s = trim(text);
  for (const auto& n : kNamedStates) {
    if (s == n.token) return DensityOperator::from_bloch(n.bloch[0], n.bloch[1], n.bloch[2]);
  }
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
    const auto parts = split_ws(std::string_view(s).substr(1, s.size() - 2));
    if (parts.size() != 3) throw ArgumentError("Bloch vector needs three components");
    const double x = parse_real(parts[0]), y = parse_real(parts[1]), z = parse_real(parts[2]);
    if (x * x + y * y + z * z > 1.0 + 1e-12) throw ArgumentError("Bloch vector is longer than 1");
    return DensityOperator::from_bloch(x, y, z);
  }
  throw ArgumentError("unknown state '" + s + "' (use 0, 1, +, -, +i, -i, mixed or [x y z])");
}

std::string state_token(const DensityOperator& rho) {
  const auto b = rho.bloch();
  for (const auto& n : kNamedStates) {
    const auto ref = DensityOperator::from_bloch(n.bloch[0], n.bloch[1], n.bloch[2]);
    if ((ref.matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0) return std::string(n.token);
  }
  return "[" + real_token(b[0]) + " " + real_token(b[1]) + " " + real_token(b[2]) + "]";
}

AncillaInit parse_ancilla(std::string_view text) {
  const std::string s = trim(text);
  if (s == "ground") return AncillaInit::ground();
  if (s == "excited") return AncillaInit::excited();
  if (s.rfind("gibbs(", 0) == 0 && s.back() == ')') {
    return AncillaInit::gibbs(parse_real(std::string_view(s).substr(6, s.size() - 7)));
  }
  return AncillaInit::explicit_state(parse_state(s));
}

std::string ancilla_token(const AncillaInit& a) {
  switch (a.kind) {
    case AncillaInit::Kind::Ground: return "ground";
    case AncillaInit::Kind::Excited: return "excited";
    case AncillaInit::Kind::Gibbs: return "gibbs(" + real_token(a.beta) + ")";
    case AncillaInit::Kind::Explicit: return state_token(*a.state);
  }
  return "ground";
}

StatePair parse_pair(std::string_view text) {
  const auto parts = split(text, '|');
  if (parts.size() != 2) throw ArgumentError("state pair must look like 'a|b'");
  StatePair p{parse_state(parts[0]), parse_state(parts[1]), {}};
  p.label = state_token(p.first) + "|" + state_token(p.second);
  return p;
}

std::vector<std::string> list_items(std::string_view text) {
  std::vector<std::string> out;
  for (auto& item : split(text, ',')) {
    if (item.empty()) throw ArgumentError("empty list item");
    out.push_back(std::move(item));
  }
  return out;
}

std::string coupling_token(const CouplingTriple& j) {
  return real_token(j.jx) + " " + real_token(j.jy) + " " + real_token(j.jz);
}

template <class T, class F>
std::string join(const std::vector<T>& items, F&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += fmt(items[i]);
  }
  return out;
}

using Setter = void (*)(RunSpec&, const std::string&);

const std::map<std::string, Setter>& model_keys() {
  static const std::map<std::string, Setter> keys{
      {"sa_coupling", [](RunSpec& r, const std::string& v) { r.model.sa_coupling = parse_coupling(v); }},
      {"aa_coupling", [](RunSpec& r, const std::string& v) { r.model.aa_coupling = parse_coupling(v); }},
      {"tau_sa", [](RunSpec& r, const std::string& v) { r.model.tau_sa = parse_real(v); }},
      {"tau_aa", [](RunSpec& r, const std::string& v) { r.model.tau_aa = parse_real(v); }},
      {"depth", [](RunSpec& r, const std::string& v) { r.model.depth = parse_int(v); }},
      {"steps", [](RunSpec& r, const std::string& v) { r.model.steps = parse_int(v); }},
      {"omega0", [](RunSpec& r, const std::string& v) { r.model.omega0 = parse_real(v); }},
      {"ancilla", [](RunSpec& r, const std::string& v) { r.model.ancilla_init = parse_ancilla(v); }},
      {"system", [](RunSpec& r, const std::string& v) { r.model.system_init = parse_state(v); }},
      {"max_qubits",
       [](RunSpec& r, const std::string& v) {
         const int q = parse_int(v);
         if (q < 2) throw ArgumentError("must be >= 2");
         r.model.max_qubits = static_cast<std::size_t>(q);
       }},
      {"aa_order",
       [](RunSpec& r, const std::string& v) {
         r.model.aa_order.clear();
         for (const auto& item : list_items(v)) {
           const auto lm = split(item, '-');
           if (lm.size() != 2) throw ArgumentError("pairs must look like 'l-m'");
           r.model.aa_order.emplace_back(parse_int(lm[0]), parse_int(lm[1]));
         }
       }},
  };
  return keys;
}

const std::map<std::string, Setter>& experiment_keys() {
  static const std::map<std::string, Setter> keys{
      {"type", [](RunSpec& r, const std::string& v) { r.experiment = parse_experiment(v); }},
      {"schemes",
       [](RunSpec& r, const std::string& v) {
         r.schemes.clear();
         for (const auto& s : list_items(v)) r.schemes.push_back(parse_scheme(s));
       }},
      {"pairs",
       [](RunSpec& r, const std::string& v) {
         r.pairs.clear();
         for (const auto& s : list_items(v)) r.pairs.push_back(parse_pair(s));
       }},
      {"sources",
       [](RunSpec& r, const std::string& v) {
         r.sources.clear();
         for (const auto& s : list_items(v)) r.sources.push_back(parse_source(s));
       }},
      {"mi_mode",
       [](RunSpec& r, const std::string& v) {
         if (v == "last") {
           r.mi_mode = MiMode::LastAncillas;
         } else if (v == "fixed") {
           r.mi_mode = MiMode::FixedAncilla;
         } else {
           throw ArgumentError("must be 'last' or 'fixed'");
         }
       }},
      {"ancillas",
       [](RunSpec& r, const std::string& v) {
         r.fixed_ancillas.clear();
         for (const auto& s : list_items(v)) r.fixed_ancillas.push_back(parse_int(s));
       }},
      {"output", [](RunSpec& r, const std::string& v) { r.output = v; }},
  };
  return keys;
}

[[noreturn]] void invalid(const std::string& key, const std::string& why) {
  throw ConfigError("invalid value for '" + key + "': " + why, 0, key);
}

void validate_spec(const RunSpec& r, const std::set<std::string>& seen) {
  if (!seen.count("experiment.type")) invalid("experiment.type", "is required");
  if (!seen.count("model.steps")) invalid("model.steps", "is required");
  const auto& m = r.model;
  if (m.steps < 0) invalid("model.steps", "must be >= 0");
  if (m.depth < 1) invalid("model.depth", "must be >= 1");
  if (!(std::isfinite(m.tau_sa) && m.tau_sa >= 0)) invalid("model.tau_sa", "must be finite and >= 0");
  if (!(std::isfinite(m.tau_aa) && m.tau_aa >= 0)) invalid("model.tau_aa", "must be finite and >= 0");
  if (!std::isfinite(m.omega0)) invalid("model.omega0", "must be finite");
  if (m.ancilla_init.kind == AncillaInit::Kind::Gibbs &&
      !(std::isfinite(m.ancilla_init.beta) && m.ancilla_init.beta >= 0)) {
    invalid("model.ancilla", "inverse temperature must be finite and >= 0");
  }
  try {
    m.validate();
  } catch (const ArgumentError& e) {
    throw ConfigError(e.what(), 0, "model");
  }

  switch (r.experiment) {
    case Experiment::Distance:
      if (r.schemes.empty()) invalid("experiment.schemes", "is required for distance runs");
      if (r.pairs.empty()) invalid("experiment.pairs", "is required for distance runs");
      break;
    case Experiment::SchemeCompare:
      if (r.schemes.size() < 2) invalid("experiment.schemes", "needs at least two schemes");
      if (r.pairs.empty()) invalid("experiment.pairs", "is required for scheme-compare runs");
      break;
    case Experiment::MiProfile:
      if (m.depth != 1 && r.mi_mode == MiMode::LastAncillas) {
        invalid("model.depth", "must be 1 for the last-ancillas profile");
      }
      if (r.mi_mode == MiMode::FixedAncilla) {
        if (r.fixed_ancillas.empty()) invalid("experiment.ancillas", "is required when mi_mode = fixed");
        for (const int k : r.fixed_ancillas) {
          if (k < 1) invalid("experiment.ancillas", "indices start at 1");
        }
      }
      break;
    case Experiment::ThermoDecomposition:
      if (r.sources.empty()) invalid("experiment.sources", "is required for thermo-decomposition runs");
      break;
    case Experiment::HeatFlux:
      if (r.pairs.size() != 1) invalid("experiment.pairs", "heat-flux runs take exactly one pair");
      break;
    case Experiment::EmbedCheck:
      if (m.depth > 2) invalid("model.depth", "embedding is implemented for depth 1 and 2");
      break;
  }
}

}  // namespace

RunSpec parse_config(std::string_view text) {
  RunSpec spec;
  std::set<std::string> seen;
  std::string section;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header", line_no);
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (section != "model" && section != "experiment") {
        throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" + section + "]", line_no);
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", line_no);
    }
    if (section.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": key outside of [model] or [experiment]", line_no);
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    const std::string full = section + "." + key;
    const auto& table = section == "model" ? model_keys() : experiment_keys();
    const auto it = table.find(key);
    if (it == table.end()) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + full + "'", line_no, full);
    }
    if (!seen.insert(full).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + full + "'", line_no, full);
    }
    try {
      it->second(spec, value);
    } catch (const ArgumentError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": invalid value for '" + full + "': " + e.what(),
                        line_no, full);
    }
  }
  validate_spec(spec, seen);
  return spec;
}

RunSpec load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string dump_config(const RunSpec& spec) {
  const auto& m = spec.model;
  std::ostringstream out;
  out << "[model]\n";
  out << "sa_coupling = " << coupling_token(m.sa_coupling) << "\n";
  out << "aa_coupling = " << coupling_token(m.aa_coupling) << "\n";
  out << "tau_sa = " << real_token(m.tau_sa) << "\n";
  out << "tau_aa = " << real_token(m.tau_aa) << "\n";
  out << "depth = " << m.depth << "\n";
  out << "steps = " << m.steps << "\n";
  out << "omega0 = " << real_token(m.omega0) << "\n";
  out << "ancilla = " << ancilla_token(m.ancilla_init) << "\n";
  out << "system = " << state_token(m.system_init) << "\n";
  if (!m.aa_order.empty()) {
    out << "aa_order = "
        << join(m.aa_order, [](const AncillaPair& p) { return std::to_string(p.first) + "-" + std::to_string(p.second); })
        << "\n";
  }
  out << "max_qubits = " << m.max_qubits << "\n";
  out << "\n[experiment]\n";
  out << "type = " << to_string(spec.experiment) << "\n";
  if (!spec.schemes.empty()) {
    out << "schemes = " << join(spec.schemes, [](SchemeId s) { return std::string(to_string(s)); }) << "\n";
  }
  if (!spec.pairs.empty()) {
    out << "pairs = "
        << join(spec.pairs, [](const StatePair& p) { return state_token(p.first) + "|" + state_token(p.second); })
        << "\n";
  }
  if (!spec.sources.empty()) {
    out << "sources = "
        << join(spec.sources, [](DecompositionSource s) { return std::string(to_string(s)); }) << "\n";
  }
  if (spec.experiment == Experiment::MiProfile) {
    out << "mi_mode = " << (spec.mi_mode == MiMode::LastAncillas ? "last" : "fixed") << "\n";
  }
  if (!spec.fixed_ancillas.empty()) {
    out << "ancillas = " << join(spec.fixed_ancillas, [](int k) { return std::to_string(k); }) << "\n";
  }
  if (!spec.output.empty()) out << "output = " << spec.output << "\n";
  return out.str();
}

bool equivalent(const RunSpec& a, const RunSpec& b, double tol) {
  const auto close = [tol](const DensityOperator& x, const DensityOperator& y) {
    return x.dim() == y.dim() && (x.matrix() - y.matrix()).cwiseAbs().maxCoeff() <= tol;
  };
  const auto& ma = a.model;
  const auto& mb = b.model;
  if (a.experiment != b.experiment || a.schemes != b.schemes || a.sources != b.sources ||
      a.mi_mode != b.mi_mode || a.fixed_ancillas != b.fixed_ancillas || a.output != b.output) {
    return false;
  }
  if (!(ma.sa_coupling == mb.sa_coupling) || !(ma.aa_coupling == mb.aa_coupling) || ma.tau_sa != mb.tau_sa ||
      ma.tau_aa != mb.tau_aa || ma.depth != mb.depth || ma.steps != mb.steps || ma.omega0 != mb.omega0 ||
      ma.aa_order != mb.aa_order || ma.max_qubits != mb.max_qubits || !close(ma.system_init, mb.system_init)) {
    return false;
  }
  if (ma.ancilla_init.kind != mb.ancilla_init.kind || ma.ancilla_init.beta != mb.ancilla_init.beta) return false;
  if (ma.ancilla_init.state.has_value() != mb.ancilla_init.state.has_value()) return false;
  if (ma.ancilla_init.state && !close(*ma.ancilla_init.state, *mb.ancilla_init.state)) return false;
  if (a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    if (!close(a.pairs[i].first, b.pairs[i].first) || !close(a.pairs[i].second, b.pairs[i].second)) return false;
  }
  return true;
}

}  // namespace cmsim::cli
