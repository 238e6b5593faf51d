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

#include "tfcv_runner/runner.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tfcv/error.hpp"
#include "tfcv/phasespace.hpp"
#include "tfcv/schmidt.hpp"
#include "tfcv/serialization.hpp"

namespace tfcv::runner {
namespace {

using nlohmann::json;

class OutputSet {
 public:
  explicit OutputSet(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

  void write(const std::string& name, const std::string& content) {
    std::ofstream out(dir_ / name, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + (dir_ / name).string());
    out << content;
    if (!out) throw Error("failed writing " + (dir_ / name).string());
    entries_.push_back({name, sha256_hex(content), content.size()});
  }

  RunReport finish(std::uint64_t seed) {
    std::vector<Entry> sorted = entries_;
    std::sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) { return a.name < b.name; });
    json files = json::array();
    for (const auto& e : sorted) files.push_back({{"path", e.name}, {"sha256", e.hash}, {"bytes", e.bytes}});
    const json manifest{{"seed", seed}, {"files", files}};
    write("manifest.json", manifest.dump(2) + "\n");
    RunReport report;
    for (const auto& e : entries_) report.files.emplace_back(e.name);
    return report;
  }

 private:
  struct Entry {
    std::string name;
    std::string hash;
    std::size_t bytes;
  };
  std::filesystem::path dir_;
  std::vector<Entry> entries_;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SpectralAmplitude build_single(const RunConfig& config) {
  return std::visit(
      [&config](const auto& s) -> SpectralAmplitude {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianSource>) {
          return gaussian_state(config.grid, s.center, s.width, s.chirp);
        } else if constexpr (std::is_same_v<T, CodeSource>) {
          return encode(s.spec, s.logical, config.grid);
        } else if constexpr (std::is_same_v<T, StateFileSource>) {
          return state_from_json(read_file(s.path));
        } else {
          throw Error("source does not describe a single photon");
        }
      },
      config.source);
}

Complex gaussian_amplitude(double u, double width) { return std::exp(-u * u / (4.0 * width * width)); }

JointSpectralAmplitude build_pair(const RunConfig& config) {
  return std::visit(
      [&config](const auto& s) -> JointSpectralAmplitude {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianJsaSource>) {
          return gaussian_jsa(s.spec, config.grid, config.grid);
        } else if constexpr (std::is_same_v<T, ProductSource>) {
          return product_jsa(gaussian_state(config.grid, s.signal.center, s.signal.width, s.signal.chirp),
                             gaussian_state(config.grid, s.idler.center, s.idler.width, s.idler.chirp));
        } else if constexpr (std::is_same_v<T, DifferenceCatSource>) {
          const double a = 0.5 * s.separation;
          const double sign = s.odd ? -1.0 : 1.0;
          const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
          const double dp = s.delta_plus;
          const double w = s.peak_width;
          JointSpectralAmplitude jsa = jsa_from_pump_phasematching(
              [dp, inv_sqrt2](double sum) { return gaussian_amplitude(sum * inv_sqrt2, dp); },
              [a, w, sign, inv_sqrt2](double diff) {
                const double minus = diff * inv_sqrt2;
                return gaussian_amplitude(minus - a, w) + sign * gaussian_amplitude(minus + a, w);
              },
              config.grid, config.grid);
          require_support(jsa, "difference_cat_jsa source");
          return jsa;
        } else if constexpr (std::is_same_v<T, StateFileSource>) {
          return jsa_from_json(read_file(s.path));
        } else {
          throw Error("source does not describe a photon pair");
        }
      },
      config.source);
}

std::string csv_columns(const std::vector<std::string>& header, const std::vector<Eigen::VectorXd>& columns) {
  std::ostringstream out;
  write_csv_columns(out, header, columns);
  return out.str();
}

std::string csv_table(const std::vector<std::string>& header, const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                      const Eigen::MatrixXd& values) {
  std::ostringstream out;
  write_csv_table(out, header, x, y, values);
  return out.str();
}

json coefficients_json(const Eigen::VectorXd& c) { return std::vector<double>(c.data(), c.data() + c.size()); }

void run_codes(const RunConfig& config, const std::optional<SpectralAmplitude>& final_state, OutputSet& out) {
  CodesOptions options;
  if (config.codes) {
    options = *config.codes;
  } else {
    options.spec = std::get<CodeSource>(config.source).spec;
  }
  const double rate = logical_error_rate(options.spec, config.grid, options.sigma_mu, options.sigma_s,
                                         options.trials, config.seed);
  json doc{{"error_rate", rate},
           {"trials", options.trials},
           {"seed", config.seed},
           {"kind", options.spec.kind == CodeKind::Cat ? "cat" : "gkp"},
           {"sigma_mu", options.sigma_mu},
           {"sigma_s", options.sigma_s}};
  if (final_state && std::holds_alternative<CodeSource>(config.source)) {
    const auto& source = std::get<CodeSource>(config.source);
    const DecodeResult d = decode(source.spec, *final_state);
    doc["decoded"] = {{"logical_in", source.logical}, {"bit", d.bit}, {"confidence", d.confidence}};
  }
  out.write("codes.json", doc.dump(2) + "\n");
}

void run_single(const RunConfig& config, OutputSet& out) {
  const SpectralAmplitude initial = build_single(config);
  const SpectralAmplitude state = apply_circuit(initial, config.circuit);
  for (Analysis a : config.analyses) {
    switch (a) {
      case Analysis::Wigner: {
        const WignerMap map = wigner(state);
        out.write("wigner.csv", csv_table({"mu", "tau", "W"}, map.mu_axis, map.tau_axis, map.values));
        break;
      }
      case Analysis::Moments: {
        const Moments m = moments(state);
        const json doc{{"mean_frequency", m.mean_frequency},
                       {"frequency_width", m.frequency_width},
                       {"mean_time", m.mean_time},
                       {"time_width", m.time_width},
                       {"width_product", m.frequency_width * m.time_width}};
        out.write("moments.json", doc.dump(2) + "\n");
        break;
      }
      case Analysis::Codes:
        run_codes(config, state, out);
        break;
      default:
        throw Error(std::string(analysis_name(a)) + " needs a photon pair");
    }
  }
}

void run_pair(const RunConfig& config, OutputSet& out) {
  const JointSpectralAmplitude initial = build_pair(config);
  const JointSpectralAmplitude state = apply_circuit(initial, config.circuit);
  const FrequencyGrid& gs = state.signal_grid();
  const FrequencyGrid& gi = state.idler_grid();
  for (Analysis a : config.analyses) {
    switch (a) {
      case Analysis::Schmidt: {
        const SchmidtDecomposition d = schmidt_decompose(state);
        const json doc{{"coefficients", coefficients_json(d.coefficients)},
                       {"K", schmidt_number(d)},
                       {"entangled", entangled_flag(d, config.entangled_n)},
                       {"entangled_n", config.entangled_n},
                       {"K_initial", schmidt_number(schmidt_decompose(initial))}};
        out.write("schmidt.json", doc.dump(2) + "\n");
        break;
      }
      case Analysis::Marginals: {
        const TwoPhotonMarginals m = two_photon_marginals(state);
        out.write("jsi.csv", csv_table({"omega_s", "omega_i", "intensity"}, gs.frequencies(), gi.frequencies(), m.jsi));
        out.write("jti.csv", csv_table({"t_s", "t_i", "intensity"}, gs.times(), gi.times(), m.jti));
        out.write("jtsi_ts_wi.csv",
                  csv_table({"t_s", "omega_i", "intensity"}, gs.times(), gi.frequencies(), m.jtsi_ts_wi));
        out.write("jtsi_ti_ws.csv",
                  csv_table({"omega_s", "t_i", "intensity"}, gs.frequencies(), gi.times(), m.jtsi_ti_ws));
        break;
      }
      case Analysis::Hom: {
        Eigen::VectorXd delays;
        if (config.hom.max_delay) {
          delays = Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(config.hom.n_delays), -*config.hom.max_delay,
                                              *config.hom.max_delay);
        } else {
          const Eigen::VectorXd scan = default_hom_delays(state);
          delays = Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(config.hom.n_delays), scan[0],
                                              scan[scan.size() - 1]);
        }
        const std::span<const double> view(delays.data(), static_cast<std::size_t>(delays.size()));
        const Eigen::VectorXd pc = hom_coincidence(state, view);
        out.write("hom.csv", csv_columns({"delay", "coincidence_probability"}, {delays, pc}));
        const json doc{{"max_coincidence", pc.maxCoeff()},
                       {"witness", hom_entanglement_witness(state, view)},
                       {"n_delays", delays.size()}};
        out.write("hom.json", doc.dump(2) + "\n");
        break;
      }
      case Analysis::Codes:
        run_codes(config, std::nullopt, out);
        break;
      default:
        throw Error(std::string(analysis_name(a)) + " needs a single-photon source");
    }
  }
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

RunReport run(const RunConfig& config) {
  if (auto errors = analysis_errors(config); !errors.empty()) throw ConfigError(std::move(errors));
  OutputSet out(config.output_dir);
  if (source_arity(config.source) == 2) {
    run_pair(config, out);
  } else {
    run_single(config, out);
  }
  return out.finish(config.seed);
}

}  // namespace tfcv::runner
