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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cmsim/cli.hpp"
#include "cmsim/errors.hpp"

namespace {

int report(const std::string& kind, const std::string& message) {
  std::string escaped;
  for (const char c : message) {
    if (c == '"' || c == '\\') escaped += '\\';
    escaped += c == '\n' ? ' ' : c;
  }
  std::cerr << "error: kind=" << kind << " message=\"" << escaped << "\"\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = cmsim::cli;

  CLI::App app{"cmsim: collision-model open quantum dynamics"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "Run the experiment described by a config file");
  run_cmd->add_option("config", config_path, "Config file")->required();

  std::string preset_name;
  std::string out_path;
  auto* preset_cmd = app.add_subcommand("preset", "Run a built-in preset");
  preset_cmd->add_option("name", preset_name, "Preset name (see list-presets)")->required();
  preset_cmd->add_option("--out", out_path, "Output CSV path (default <name>.csv)");

  std::string dump_name;
  auto* dump_cmd = app.add_subcommand("dump-config", "Print a preset as config text");
  dump_cmd->add_option("name", dump_name, "Preset name")->required();

  auto* list_cmd = app.add_subcommand("list-presets", "List built-in presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      return cli::run(cli::load_config(config_path), std::cout, std::cerr);
    }
    if (preset_cmd->parsed()) {
      auto spec = cli::preset(preset_name);
      if (!out_path.empty()) spec.output = out_path;
      return cli::run(spec, std::cout, std::cerr);
    }
    if (dump_cmd->parsed()) {
      std::cout << cli::dump_config(cli::preset(dump_name));
      return 0;
    }
    if (list_cmd->parsed()) {
      for (const auto& name : cli::preset_names()) std::cout << name << '\n';
      return 0;
    }
  } catch (const cli::ConfigError& e) {
    return report("config", e.what());
  } catch (const cmsim::ArgumentError& e) {
    return report("argument", e.what());
  }
  return 1;
}
