// Copyright 2026 The tfcv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tfcv/error.hpp"
#include "tfcv_runner/runner.hpp"

namespace {

using tfcv::runner::Analysis;

void report(const std::string& kind, int code, const std::string& message,
            const std::vector<std::string>& details = {}, std::optional<std::size_t> gate = std::nullopt) {
  nlohmann::json line{{"status", "error"}, {"kind", kind}, {"exit_code", code}, {"message", message}};
  if (!details.empty()) line["errors"] = details;
  if (gate) line["gate_index"] = *gate;
  std::cerr << line.dump() << '\n';
}

struct Overrides {
  std::string out;
  std::optional<std::uint64_t> seed;
};

void apply(tfcv::runner::RunConfig& config, const Overrides& o) {
  if (!o.out.empty()) config.output_dir = o.out;
  if (o.seed) config.seed = *o.seed;
}

struct CodesFlags {
  std::string kind = "gkp";
  double spacing = 2.0;
  double peak_width = 0.2;
  double envelope_width = 4.0;
  double sigma_mu = 0.2;
  double sigma_s = 0.0;
  std::size_t trials = 10000;
  std::size_t n_points = 512;
  double grid_spacing = 0.0;
};

tfcv::runner::RunConfig codes_config(const CodesFlags& f) {
  std::vector<std::string> errors;
  if (f.kind != "gkp" && f.kind != "cat") errors.push_back("--kind must be gkp or cat");
  tfcv::runner::CodesOptions options;
  options.spec.kind = f.kind == "cat" ? tfcv::CodeKind::Cat : tfcv::CodeKind::Gkp;
  options.spec.spacing = f.spacing;
  options.spec.peak_width = f.peak_width;
  options.spec.envelope_width = f.envelope_width;
  options.sigma_mu = f.sigma_mu;
  options.sigma_s = f.sigma_s;
  options.trials = f.trials;
  try {
    options.spec.validate();
  } catch (const std::invalid_argument& e) {
    errors.push_back(e.what());
  }
  if (f.sigma_mu < 0.0 || f.sigma_s < 0.0) errors.push_back("noise sigmas must be non-negative");
  if (f.trials < 1) errors.push_back("--trials must be at least 1");

  tfcv::runner::RunConfig config;
  try {
    config.grid = f.grid_spacing > 0.0 ? tfcv::FrequencyGrid(f.n_points, f.grid_spacing)
                                       : tfcv::FrequencyGrid::balanced(f.n_points);
  } catch (const std::invalid_argument& e) {
    errors.push_back(std::string("grid ") + e.what());
  }
  if (!errors.empty()) throw tfcv::runner::ConfigError(errors);
  config.source = tfcv::runner::CodeSource{options.spec, 0};
  config.codes = options;
  config.analyses = {Analysis::Codes};
  return config;
}

int execute(const std::function<tfcv::runner::RunConfig()>& make_config) {
  try {
    const auto report_files = tfcv::runner::run(make_config());
    nlohmann::json ok{{"status", "ok"}, {"files", nlohmann::json::array()}};
    for (const auto& f : report_files.files) ok["files"].push_back(f.generic_string());
    std::cout << ok.dump() << '\n';
    return tfcv::runner::kExitOk;
  } catch (const tfcv::runner::ConfigError& e) {
    report("config", tfcv::runner::kExitConfig, "invalid configuration", e.errors());
    return tfcv::runner::kExitConfig;
  } catch (const tfcv::SupportGuardError& e) {
    report("guard", tfcv::runner::kExitGuard, e.what(), {}, e.gate_index());
    return tfcv::runner::kExitGuard;
  } catch (const tfcv::FormatError& e) {
    report("config", tfcv::runner::kExitConfig, e.what(), {}, e.gate_index());
    return tfcv::runner::kExitConfig;
  } catch (const tfcv::GridMismatchError& e) {
    report("config", tfcv::runner::kExitConfig, e.what(), {}, e.gate_index());
    return tfcv::runner::kExitConfig;
  } catch (const tfcv::Error& e) {
    report("runtime", tfcv::runner::kExitFailure, e.what(), {}, e.gate_index());
    return tfcv::runner::kExitFailure;
  } catch (const std::invalid_argument& e) {
    report("config", tfcv::runner::kExitConfig, e.what());
    return tfcv::runner::kExitConfig;
  } catch (const std::exception& e) {
    report("runtime", tfcv::runner::kExitFailure, e.what());
    return tfcv::runner::kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tfcv: time-frequency continuous-variable photon simulator"};
  app.require_subcommand(1);

  Overrides overrides;
  std::string config_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", overrides.out, "Output directory (overrides output_dir)");
    sub->add_option("--seed", overrides.seed, "Random seed (overrides seed)");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "Run every analysis listed in a config file");
  run_cmd->add_option("config", config_path, "Path to config.json")->required();
  add_common(run_cmd);

  std::vector<std::pair<CLI::App*, Analysis>> single;
  for (const auto& [name, analysis, help] :
       std::vector<std::tuple<std::string, Analysis, std::string>>{
           {"schmidt", Analysis::Schmidt, "Schmidt coefficients and K of the final pair state"},
           {"wigner", Analysis::Wigner, "Chronocyclic Wigner map of the final single-photon state"},
           {"hom", Analysis::Hom, "Hong-Ou-Mandel coincidence scan of the final pair state"},
           {"marginals", Analysis::Marginals, "JSI, JTI and both cross marginals of the final pair state"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", config_path, "Path to config.json")->required();
    add_common(sub);
    single.emplace_back(sub, analysis);
  }

  CodesFlags flags;
  CLI::App* codes_cmd = app.add_subcommand("codes", "Logical error rate of a cat or GKP code under shift noise");
  codes_cmd->add_option("config", config_path, "Optional config.json with a codes section");
  codes_cmd->add_option("--kind", flags.kind, "gkp or cat");
  codes_cmd->add_option("--spacing", flags.spacing, "GKP lattice spacing or cat peak separation");
  codes_cmd->add_option("--peak-width", flags.peak_width, "Peak width");
  codes_cmd->add_option("--envelope-width", flags.envelope_width, "GKP envelope width");
  codes_cmd->add_option("--sigma-mu", flags.sigma_mu, "Frequency-shift noise sigma");
  codes_cmd->add_option("--sigma-s", flags.sigma_s, "Time-shift noise sigma");
  codes_cmd->add_option("--trials", flags.trials, "Monte Carlo trials");
  codes_cmd->add_option("--n-points", flags.n_points, "Grid size");
  codes_cmd->add_option("--grid-spacing", flags.grid_spacing, "Grid spacing (default: balanced grid)");
  add_common(codes_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report("usage", tfcv::runner::kExitConfig, e.what());
    return tfcv::runner::kExitConfig;
  }

  if (run_cmd->parsed()) {
    return execute([&] {
      auto config = tfcv::runner::load_config(config_path);
      apply(config, overrides);
      return config;
    });
  }
  for (const auto& [sub, analysis] : single) {
    if (!sub->parsed()) continue;
    const Analysis wanted = analysis;
    return execute([&] {
      auto config = tfcv::runner::load_config(config_path);
      config.analyses = {wanted};
      apply(config, overrides);
      return config;
    });
  }
  return execute([&] {
    if (!config_path.empty()) {
      auto config = tfcv::runner::load_config(config_path);
      config.analyses = {Analysis::Codes};
      apply(config, overrides);
      return config;
    }
    auto config = codes_config(flags);
    apply(config, overrides);
    return config;
  });
}
