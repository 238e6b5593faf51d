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

#ifndef TFCV_RUNNER_CONFIG_HPP
#define TFCV_RUNNER_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tfcv/circuit.hpp"
#include "tfcv/codes.hpp"
#include "tfcv/spdc.hpp"

namespace tfcv::runner {

enum class Analysis { Wigner, Schmidt, Hom, Marginals, Codes, Moments };

std::string_view analysis_name(Analysis a);
std::optional<Analysis> analysis_from_name(std::string_view name);

struct GaussianSource {
  double center = 0.0;
  double width = 1.0;
  double chirp = 0.0;
};

struct CodeSource {
  CodeSpec spec;
  int logical = 0;
};

struct GaussianJsaSource {
  GaussianJsaSpec spec;
};

struct ProductSource {
  GaussianSource signal;
  GaussianSource idler;
};

/// G(omega_+) [G(omega_- - a) -+ G(omega_- + a)] with a = separation / 2.
struct DifferenceCatSource {
  double delta_plus = 1.0;
  double separation = 4.0;
  double peak_width = 0.5;
  bool odd = true;
};

/// JSON state or JSA file (see tfcv/serialization.hpp).
struct StateFileSource {
  std::filesystem::path path;
  int arity = 1;
};

using Source =
    std::variant<GaussianSource, CodeSource, GaussianJsaSource, ProductSource, DifferenceCatSource, StateFileSource>;

struct HomOptions {
  std::size_t n_delays = 201;
  std::optional<double> max_delay;  ///< default: 5x the RMS width of t_s - t_i
};

struct CodesOptions {
  CodeSpec spec;
  double sigma_mu = 0.0;
  double sigma_s = 0.0;
  std::size_t trials = 10000;
};

struct RunConfig {
  FrequencyGrid grid = FrequencyGrid::balanced(256);
  Source source;
  Circuit circuit;
  std::vector<Analysis> analyses;
  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 0;
  HomOptions hom;
  std::optional<CodesOptions> codes;
  std::size_t entangled_n = 8;
};

/// All validation problems found in a config, one message per problem.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

/// Strict parse: unknown keys, wrong types, unknown analyses and missing
/// files are all reported together. Relative paths resolve against
/// base_dir.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = ".");
RunConfig load_config(const std::filesystem::path& path);

/// Consistency problems between the source arity, the circuit and the
/// analysis list; empty when the combination is runnable.
std::vector<std::string> analysis_errors(const RunConfig& config);

/// 2 for sources that produce a photon pair.
int source_arity(const Source& source);

}  // namespace tfcv::runner

#endif  // TFCV_RUNNER_CONFIG_HPP
