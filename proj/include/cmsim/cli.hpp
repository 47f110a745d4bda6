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

// Run specifications for the command-line front end.
//
// Config files are UTF-8 text made of `key = value` lines grouped under the
// sections [model] and [experiment]. `#` starts a comment. See README.md for
// the full key list.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cmsim/diagnostics.hpp"
#include "cmsim/engine.hpp"
#include "cmsim/thermo.hpp"

namespace cmsim::cli {

enum class Experiment { Distance, MiProfile, ThermoDecomposition, HeatFlux, EmbedCheck, SchemeCompare };

std::string_view to_string(Experiment e);
Experiment parse_experiment(std::string_view name);

enum class MiMode { LastAncillas, FixedAncilla };

struct RunSpec {
  Experiment experiment = Experiment::Distance;
  ModelConfig model;
  std::vector<SchemeId> schemes;
  std::vector<StatePair> pairs;
  std::vector<DecompositionSource> sources;
  MiMode mi_mode = MiMode::LastAncillas;
  std::vector<int> fixed_ancillas;
  std::string output;
};

/// Parse or validation failure. line() is 0 for validation errors.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line, std::string key = {})
      : std::runtime_error(what), line_(line), key_(std::move(key)) {}
  int line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }

 private:
  int line_;
  std::string key_;
};

RunSpec parse_config(std::string_view text);
RunSpec load_config(const std::filesystem::path& path);
/// Config text that parse_config() maps back to an equivalent spec.
std::string dump_config(const RunSpec& spec);

/// Same experiment, model and lists, states equal within tol.
bool equivalent(const RunSpec& a, const RunSpec& b, double tol = 1e-15);

std::vector<std::string> preset_names();
/// Throws ArgumentError for unknown names.
RunSpec preset(std::string_view name);

/// Computes the experiment and returns the CSV text. Summary lines (BLP
/// totals, alignment) are appended to summary when given.
std::string render_csv(const RunSpec& spec, std::vector<std::string>* summary = nullptr);

/// Renders and writes spec.output. Returns 0 on success; otherwise prints a
/// single `error: kind=<kind> message="<text>"` line to err, removes any
/// partial output and returns non-zero.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace cmsim::cli
