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
#include <cstdio>
#include <fstream>
#include <ostream>
#include <system_error>

#include "cmsim/cli.hpp"
#include "cmsim/csv.hpp"
#include "cmsim/errors.hpp"

namespace cmsim::cli {

namespace {

using Row = std::vector<CsvCell>;

std::string fmt(double v) { return CsvWriter::format_real(v); }

CsvCell at(const Series& s, std::size_t i) {
  if (i < s.size()) return s[i].value;
  return std::monostate{};
}

ModelConfig with_system(ModelConfig cfg, const DensityOperator& rho) {
  cfg.system_init = rho;
  return cfg;
}

std::string render_distance(const RunSpec& spec, std::vector<std::string>& summary) {
  std::vector<std::string> header{"step"};
  std::vector<Series> columns;
  for (const auto scheme : spec.schemes) {
    for (const auto& pair : spec.pairs) {
      header.push_back("D_" + std::string(to_string(scheme)) + "_" + pair.label);
      columns.push_back(distance_trajectory(spec.model, scheme, pair));
      if (columns.back().size() >= 2) {
        summary.push_back("blp " + std::string(to_string(scheme)) + " " + pair.label + " = " +
                          fmt(blp_accumulation(columns.back())));
      }
    }
  }
  CsvWriter csv(header);
  for (int n = 0; n <= spec.model.steps; ++n) {
    Row row{static_cast<long long>(n)};
    for (const auto& c : columns) row.push_back(at(c, static_cast<std::size_t>(n)));
    csv.row(row);
  }
  return csv.text();
}

std::string render_mi(const RunSpec& spec, std::vector<std::string>& summary) {
  const int n_max = spec.model.steps;
  if (spec.mi_mode == MiMode::LastAncillas) {
    const auto profile = mi_profile_last_ancillas(spec.model, n_max);
    CsvWriter csv({"step", "I_S_En", "I_S_Enm1"});
    for (std::size_t i = 0; i < profile.last.size(); ++i) {
      csv.row({static_cast<long long>(profile.last[i].step), profile.last[i].value, profile.previous[i].value});
    }
    if (!profile.last.empty()) {
      summary.push_back("final I(S:E_n) = " + fmt(profile.last.back().value) +
                        ", I(S:E_n-1) = " + fmt(profile.previous.back().value));
    }
    return csv.text();
  }
  std::vector<std::string> header{"step"};
  std::vector<Series> columns;
  for (const int k : spec.fixed_ancillas) {
    header.push_back("I_S_E" + std::to_string(k));
    columns.push_back(mi_profile_fixed_ancilla(spec.model, k, n_max));
  }
  CsvWriter csv(header);
  for (int n = 0; n <= n_max; ++n) {
    Row row{static_cast<long long>(n)};
    for (const auto& c : columns) row.push_back(at(c, static_cast<std::size_t>(n)));
    csv.row(row);
  }
  return csv.text();
}

std::string render_thermo(const RunSpec& spec, std::vector<std::string>& summary) {
  const bool gibbs = spec.model.ancilla_init.kind == AncillaInit::Kind::Gibbs;
  std::vector<std::string> header{"step"};
  std::vector<std::vector<EntropyDecomposition>> columns;
  for (const auto source : spec.sources) {
    const std::string p = std::string(to_string(source)) + ".";
    for (const char* name : {"delta_s_system", "s_corr", "s_env", "q", "minus_delta_s_env", "discrepancy"}) {
      header.push_back(p + name);
    }
    if (gibbs) header.push_back(p + "q_gibbs");
    columns.push_back(entropy_decomposition_series(spec.model, source));
    double worst = 0.0;
    for (const auto& d : columns.back()) worst = std::max(worst, std::abs(d.discrepancy()));
    summary.push_back("max |discrepancy| " + std::string(to_string(source)) + " = " + fmt(worst) +
                      (columns.back().empty() || !columns.back().front().regularized ? "" : " (regularized)"));
  }
  CsvWriter csv(header);
  for (int n = 0; n <= spec.model.steps; ++n) {
    Row row{static_cast<long long>(n)};
    for (const auto& c : columns) {
      const auto& d = c.at(static_cast<std::size_t>(n));
      row.insert(row.end(), {d.delta_s_system, d.s_corr, d.s_env, d.q_term, d.minus_delta_s_env, d.discrepancy()});
      if (gibbs) row.push_back(d.q_gibbs ? CsvCell{*d.q_gibbs} : CsvCell{});
    }
    csv.row(row);
  }
  return csv.text();
}

SchemeId heat_scheme(const ModelConfig& cfg) { return cfg.depth <= 2 ? SchemeId::Embedded : SchemeId::FullChain; }

std::string render_heat(const RunSpec& spec, std::vector<std::string>& summary) {
  const auto& pair = spec.pairs.front();
  const SchemeId scheme = heat_scheme(spec.model);
  const auto distance = distance_trajectory(spec.model, scheme, pair);
  const auto heat_a = heat_series(with_system(spec.model, pair.first), scheme);
  const auto heat_b = heat_series(with_system(spec.model, pair.second), scheme);

  const bool isotropic = spec.model.sa_coupling.isotropic();
  const bool gibbs = spec.model.ancilla_init.kind == AncillaInit::Kind::Gibbs;
  if (isotropic && gibbs) {
    const auto a = flux_alignment(spec.model, pair, scheme);
    std::string line = "flux alignment (sign agreement) " + pair.label + ": ";
    line += a.degenerate ? std::string("degenerate") : "fraction = " + fmt(a.agreement_fraction);
    for (int i = 0; i < 2; ++i) {
      const auto& m = a.members[static_cast<std::size_t>(i)];
      line += "; member " + std::to_string(i + 1) + " sign = " + std::to_string(m.sign) +
              ", counted = " + std::to_string(m.counted_steps);
    }
    summary.push_back(line);
  } else {
    summary.push_back("flux alignment: not evaluated (needs isotropic SA coupling and Gibbs ancillas)");
  }

  CsvWriter csv({"step", "D", "Q_S_1", "Q_E_1", "Q_S_2", "Q_E_2", "dD", "dQ_S_1", "dQ_S_2"});
  const auto steps = static_cast<std::size_t>(spec.model.steps);
  for (std::size_t n = 0; n <= steps; ++n) {
    Row row{static_cast<long long>(n), distance[n].value, heat_a[n].q_system, heat_a[n].q_environment,
            heat_b[n].q_system, heat_b[n].q_environment};
    if (n < steps) {
      row.insert(row.end(), {distance[n + 1].value - distance[n].value, heat_a[n + 1].q_system - heat_a[n].q_system,
                             heat_b[n + 1].q_system - heat_b[n].q_system});
    } else {
      row.insert(row.end(), {CsvCell{}, CsvCell{}, CsvCell{}});
    }
    csv.row(row);
  }
  return csv.text();
}

// Full chain over as many steps as the register capacity allows.
std::vector<DensityOperator> full_chain_prefix(const ModelConfig& cfg) {
  try {
    return evolve_full_chain(cfg).system_states();
  } catch (const CapacityError& e) {
    if (e.max_feasible_steps() < 0) throw;
    ModelConfig shorter = cfg;
    shorter.steps = std::min(cfg.steps, e.max_feasible_steps());
    return evolve_full_chain(shorter).system_states();
  }
}

std::vector<double> stepwise(const std::vector<DensityOperator>& a, const std::vector<DensityOperator>& b) {
  std::vector<double> out;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) out.push_back(trace_distance(a[i], b[i]));
  return out;
}

CsvCell cell(const std::vector<double>& v, std::size_t i) {
  if (i < v.size()) return v[i];
  return std::monostate{};
}

std::string render_embed_check(const RunSpec& spec, std::vector<std::string>& summary) {
  const auto embedded = evolve_embedded(spec.model).system_states();
  const auto full = stepwise(embedded, full_chain_prefix(spec.model));
  const bool nested = spec.model.depth == 1;
  std::vector<double> erase_b;
  std::vector<std::string> header{"step", "dev_FullChain"};
  if (nested) {
    header.push_back("dev_EraseB");
    erase_b = stepwise(embedded, evolve_scheme(spec.model, SchemeId::EraseB).system_states());
  }
  const auto peak = [](const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); };
  summary.push_back("max deviation vs FullChain over " + std::to_string(full.empty() ? 0 : full.size() - 1) +
                    " steps = " + fmt(peak(full)));
  if (nested) summary.push_back("max deviation vs EraseB = " + fmt(peak(erase_b)));

  CsvWriter csv(header);
  for (std::size_t n = 0; n < embedded.size(); ++n) {
    Row row{static_cast<long long>(n), cell(full, n)};
    if (nested) row.push_back(cell(erase_b, n));
    csv.row(row);
  }
  return csv.text();
}

std::string render_scheme_compare(const RunSpec& spec, std::vector<std::string>& summary) {
  const auto steps = static_cast<std::size_t>(spec.model.steps);
  const SchemeId reference = spec.schemes.front();
  std::vector<std::vector<DensityOperator>> ref_runs;
  for (const auto& pair : spec.pairs) {
    for (const auto* rho : {&pair.first, &pair.second}) {
      ref_runs.push_back(evolve(with_system(spec.model, *rho), reference).system_states());
    }
  }
  std::vector<std::string> header{"step"};
  std::vector<std::vector<double>> columns;
  for (std::size_t s = 1; s < spec.schemes.size(); ++s) {
    header.push_back("dev_" + std::string(to_string(spec.schemes[s])));
    std::vector<double> worst(steps + 1, 0.0);
    std::size_t r = 0;
    for (const auto& pair : spec.pairs) {
      for (const auto* rho : {&pair.first, &pair.second}) {
        const auto dev = stepwise(ref_runs[r++], evolve(with_system(spec.model, *rho), spec.schemes[s]).system_states());
        for (std::size_t n = 0; n < dev.size(); ++n) worst[n] = std::max(worst[n], dev[n]);
      }
    }
    summary.push_back("max deviation " + std::string(to_string(spec.schemes[s])) + " vs " +
                      std::string(to_string(reference)) + " = " + fmt(*std::max_element(worst.begin(), worst.end())));
    columns.push_back(std::move(worst));
  }
  header.push_back("max_deviation");
  CsvWriter csv(header);
  for (std::size_t n = 0; n <= steps; ++n) {
    Row row{static_cast<long long>(n)};
    double worst = 0.0;
    for (const auto& c : columns) {
      row.push_back(c[n]);
      worst = std::max(worst, c[n]);
    }
    row.push_back(worst);
    csv.row(row);
  }
  return csv.text();
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return "config";
  if (dynamic_cast<const CapacityError*>(&e)) return "capacity";
  if (dynamic_cast<const UnsupportedConfiguration*>(&e)) return "unsupported";
  if (dynamic_cast<const InvariantViolation*>(&e)) return "invariant";
  if (dynamic_cast<const ArgumentError*>(&e)) return "argument";
  if (dynamic_cast<const std::filesystem::filesystem_error*>(&e)) return "io";
  return "internal";
}

std::string escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

std::string render_csv(const RunSpec& spec, std::vector<std::string>* summary) {
  std::vector<std::string> lines;
  std::string text;
  switch (spec.experiment) {
    case Experiment::Distance: text = render_distance(spec, lines); break;
    case Experiment::MiProfile: text = render_mi(spec, lines); break;
    case Experiment::ThermoDecomposition: text = render_thermo(spec, lines); break;
    case Experiment::HeatFlux: text = render_heat(spec, lines); break;
    case Experiment::EmbedCheck: text = render_embed_check(spec, lines); break;
    case Experiment::SchemeCompare: text = render_scheme_compare(spec, lines); break;
  }
  if (summary) summary->insert(summary->end(), lines.begin(), lines.end());
  return text;
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  const std::filesystem::path target = spec.output;
  const std::filesystem::path partial = spec.output + ".partial";
  try {
    if (spec.output.empty()) throw ConfigError("experiment.output is required", 0, "experiment.output");
    std::vector<std::string> summary;
    const std::string text = render_csv(spec, &summary);
    {
      std::ofstream f(partial, std::ios::binary | std::ios::trunc);
      if (!f) throw IoError("cannot open '" + partial.string() + "' for writing");
      f << text;
      f.flush();
      if (!f) throw IoError("write to '" + partial.string() + "' failed");
    }
    std::filesystem::rename(partial, target);
    for (const auto& line : summary) out << line << '\n';
    out << "wrote " << target.string() << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::error_code ec;
    if (!spec.output.empty()) std::filesystem::remove(partial, ec);
    const std::string kind = dynamic_cast<const IoError*>(&e) ? "io" : error_kind(e);
    err << "error: kind=" << kind << " message=\"" << escape(e.what()) << "\"\n";
    return kind == "config" ? 2 : 1;
  }
}

}  // namespace cmsim::cli
