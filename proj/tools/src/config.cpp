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

#include "tfcv_runner/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tfcv/error.hpp"

namespace tfcv::runner {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Analysis, std::string_view>, 6> kAnalyses{{
    {Analysis::Wigner, "wigner"},
    {Analysis::Schmidt, "schmidt"},
    {Analysis::Hom, "hom"},
    {Analysis::Marginals, "marginals"},
    {Analysis::Codes, "codes"},
    {Analysis::Moments, "moments"},
}};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

// Reads fields of one JSON object, recording every problem instead of
// stopping at the first. finish() flags keys that were never read.
class Reader {
 public:
  Reader(const json& object, std::string where, std::vector<std::string>& errors)
      : object_(object), where_(std::move(where)), errors_(errors) {
    ok_ = object_.is_object();
    if (!ok_) fail(where_, "must be an object");
  }

  bool ok() const { return ok_; }
  bool has(const std::string& key) const { return ok_ && object_.contains(key); }

  const json* raw(const std::string& key, bool required) {
    seen_.insert(key);
    if (!ok_) return nullptr;
    if (!object_.contains(key)) {
      if (required) fail(path(key), "is required");
      return nullptr;
    }
    return &object_.at(key);
  }

  std::optional<double> number(const std::string& key, bool required, bool positive = false) {
    const json* v = raw(key, required);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number()) {
      fail(path(key), "must be a number");
      return std::nullopt;
    }
    const double x = v->get<double>();
    if (!std::isfinite(x)) {
      fail(path(key), "must be finite");
      return std::nullopt;
    }
    if (positive && !(x > 0.0)) {
      fail(path(key), "must be positive");
      return std::nullopt;
    }
    return x;
  }

  std::optional<std::uint64_t> unsigned_integer(const std::string& key, bool required) {
    const json* v = raw(key, required);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number_unsigned()) {
      fail(path(key), "must be a non-negative integer");
      return std::nullopt;
    }
    return v->get<std::uint64_t>();
  }

  std::optional<std::string> string(const std::string& key, bool required) {
    const json* v = raw(key, required);
    if (v == nullptr) return std::nullopt;
    if (!v->is_string()) {
      fail(path(key), "must be a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::optional<bool> boolean(const std::string& key, bool required) {
    const json* v = raw(key, required);
    if (v == nullptr) return std::nullopt;
    if (!v->is_boolean()) {
      fail(path(key), "must be true or false");
      return std::nullopt;
    }
    return v->get<bool>();
  }

  void finish() {
    if (!ok_) return;
    for (const auto& [key, value] : object_.items()) {
      if (!seen_.count(key)) fail(path(key), "is not a recognised key");
    }
  }

  std::string path(const std::string& key) const { return where_.empty() ? key : where_ + "." + key; }
  void fail(const std::string& field, const std::string& message) { errors_.push_back(field + " " + message); }

 private:
  const json& object_;
  std::string where_;
  std::vector<std::string>& errors_;
  std::set<std::string> seen_;
  bool ok_ = true;
};

std::optional<FrequencyGrid> read_grid(Reader& top, std::vector<std::string>& errors) {
  const json* node = top.raw("grid", true);
  if (node == nullptr) return std::nullopt;
  Reader r(*node, "grid", errors);
  const auto n = r.unsigned_integer("n_points", true);
  const auto spacing = r.number("spacing", false, true);
  const auto center = r.number("center", false);
  r.finish();
  if (!n) return std::nullopt;
  try {
    if (spacing) return FrequencyGrid(*n, *spacing, center.value_or(0.0));
    return FrequencyGrid::balanced(*n, center.value_or(0.0));
  } catch (const std::invalid_argument& e) {
    errors.push_back(std::string("grid ") + e.what());
    return std::nullopt;
  }
}

GaussianSource read_gaussian(Reader& r) {
  GaussianSource g;
  g.center = r.number("center", false).value_or(0.0);
  g.width = r.number("width", true, true).value_or(1.0);
  g.chirp = r.number("chirp", false).value_or(0.0);
  return g;
}

int read_logical(Reader& r) {
  const auto v = r.unsigned_integer("logical", false);
  if (v && *v > 1) {
    r.fail(r.path("logical"), "must be 0 or 1");
    return 0;
  }
  return static_cast<int>(v.value_or(0));
}

CodeSpec read_code_spec(Reader& r, CodeKind kind, bool spacing_is_separation) {
  CodeSpec spec;
  spec.kind = kind;
  spec.spacing = r.number(spacing_is_separation ? "separation" : "spacing", true, true).value_or(spec.spacing);
  spec.peak_width = r.number("peak_width", true, true).value_or(spec.peak_width);
  if (kind == CodeKind::Gkp) {
    spec.envelope_width = r.number("envelope_width", true, true).value_or(spec.envelope_width);
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    r.fail(r.path("peak_width"), e.what());
  }
  return spec;
}

std::optional<Source> read_source(Reader& top, const std::filesystem::path& base_dir,
                                  std::vector<std::string>& errors) {
  const json* node = top.raw("source", true);
  if (node == nullptr) return std::nullopt;
  Reader r(*node, "source", errors);
  if (!r.ok()) return std::nullopt;
  const auto type = r.string("type", true);
  if (!type) {
    r.finish();
    return std::nullopt;
  }
  std::optional<Source> out;
  if (*type == "gaussian") {
    out = read_gaussian(r);
  } else if (*type == "cat") {
    CodeSource c;
    c.spec = read_code_spec(r, CodeKind::Cat, true);
    c.logical = read_logical(r);
    out = c;
  } else if (*type == "gkp") {
    CodeSource c;
    c.spec = read_code_spec(r, CodeKind::Gkp, false);
    c.logical = read_logical(r);
    out = c;
  } else if (*type == "gaussian_jsa") {
    GaussianJsaSource g;
    g.spec.delta_plus = r.number("delta_plus", true, true).value_or(1.0);
    g.spec.delta_minus = r.number("delta_minus", true, true).value_or(1.0);
    g.spec.center_s = r.number("center_s", false).value_or(0.0);
    g.spec.center_i = r.number("center_i", false).value_or(0.0);
    out = g;
  } else if (*type == "product") {
    ProductSource p;
    for (const char* photon : {"signal", "idler"}) {
      const json* sub = r.raw(photon, true);
      if (sub == nullptr) continue;
      Reader s(*sub, r.path(photon), errors);
      (std::string(photon) == "signal" ? p.signal : p.idler) = read_gaussian(s);
      s.finish();
    }
    out = p;
  } else if (*type == "difference_cat_jsa") {
    DifferenceCatSource d;
    d.delta_plus = r.number("delta_plus", true, true).value_or(d.delta_plus);
    d.separation = r.number("separation", true, true).value_or(d.separation);
    d.peak_width = r.number("peak_width", true, true).value_or(d.peak_width);
    const auto parity = r.string("parity", false).value_or("odd");
    if (parity != "odd" && parity != "even") r.fail(r.path("parity"), "must be \"odd\" or \"even\"");
    d.odd = parity != "even";
    out = d;
  } else if (*type == "state_file") {
    StateFileSource f;
    if (const auto path = r.string("path", true)) {
      f.path = base_dir / *path;
      std::ifstream in(f.path);
      if (!in) {
        r.fail(r.path("path"), "file not found: " + f.path.string());
      } else {
        try {
          const json doc = json::parse(in);
          f.arity = doc.is_object() && doc.contains("layout") ? 2 : 1;
        } catch (const json::parse_error& e) {
          r.fail(r.path("path"), "is not valid JSON: " + f.path.string());
        }
      }
    }
    out = f;
  } else {
    r.fail(r.path("type"), "unknown source type \"" + *type + "\"");
  }
  r.finish();
  return out;
}

Circuit read_circuit(Reader& top, const std::filesystem::path& base_dir, std::vector<std::string>& errors) {
  const json* node = top.raw("circuit", false);
  if (node == nullptr) return {};
  std::string text;
  std::string origin = "circuit";
  if (node->is_string()) {
    const std::filesystem::path path = base_dir / node->get<std::string>();
    std::ifstream in(path);
    if (!in) {
      errors.push_back("circuit file not found: " + path.string());
      return {};
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
    origin = "circuit (" + path.string() + ")";
  } else if (node->is_array()) {
    text = node->dump();
  } else {
    errors.push_back("circuit must be a file path or an array of gates");
    return {};
  }
  try {
    return parse_circuit(text);
  } catch (const Error& e) {
    errors.push_back(origin + ": " + e.what());
  }
  return {};
}

}  // namespace

std::string_view analysis_name(Analysis a) {
  for (const auto& [kind, name] : kAnalyses) {
    if (kind == a) return name;
  }
  return "?";
}

std::optional<Analysis> analysis_from_name(std::string_view name) {
  for (const auto& [kind, n] : kAnalyses) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error(join(errors)), errors_(std::move(errors)) {}

int source_arity(const Source& source) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GaussianJsaSource> || std::is_same_v<T, ProductSource> ||
                      std::is_same_v<T, DifferenceCatSource>) {
          return 2;
        } else if constexpr (std::is_same_v<T, StateFileSource>) {
          return s.arity;
        } else {
          return 1;
        }
      },
      source);
}

std::vector<std::string> analysis_errors(const RunConfig& config) {
  std::vector<std::string> errors;
  const int arity = source_arity(config.source);
  if (config.circuit.min_arity() > arity) {
    errors.push_back("circuit needs a photon pair but the source produces a single photon");
  }
  for (Analysis a : config.analyses) {
    const bool pair_only = a == Analysis::Schmidt || a == Analysis::Hom || a == Analysis::Marginals;
    const bool single_only = a == Analysis::Wigner || a == Analysis::Moments;
    if (pair_only && arity != 2) {
      errors.push_back("analyses: \"" + std::string(analysis_name(a)) + "\" needs a photon-pair source");
    }
    if (single_only && arity != 1) {
      errors.push_back("analyses: \"" + std::string(analysis_name(a)) + "\" needs a single-photon source");
    }
    if (a == Analysis::Codes && !config.codes && !std::holds_alternative<CodeSource>(config.source)) {
      errors.push_back("analyses: \"codes\" needs a \"codes\" section or a cat/gkp source");
    }
  }
  return errors;
}

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("config is not valid JSON: ") + e.what()});
  }
  std::vector<std::string> errors;
  Reader top(doc, "", errors);
  if (!top.ok()) throw ConfigError(errors);

  RunConfig config;
  const auto grid = read_grid(top, errors);
  if (grid) config.grid = *grid;
  const auto source = read_source(top, base_dir, errors);
  if (source) config.source = *source;
  config.circuit = read_circuit(top, base_dir, errors);

  if (const json* list = top.raw("analyses", true)) {
    if (!list->is_array() || list->empty()) {
      errors.push_back("analyses must be a non-empty array of names");
    } else {
      for (const auto& item : *list) {
        const auto name = item.is_string() ? item.get<std::string>() : item.dump();
        const auto a = analysis_from_name(name);
        if (!a) {
          errors.push_back("analyses: unknown analysis \"" + name +
                           "\" (expected wigner, schmidt, hom, marginals, codes or moments)");
        } else if (std::find(config.analyses.begin(), config.analyses.end(), *a) != config.analyses.end()) {
          errors.push_back("analyses: \"" + name + "\" is listed twice");
        } else {
          config.analyses.push_back(*a);
        }
      }
    }
  }
  if (const auto out = top.string("output_dir", false)) config.output_dir = base_dir / *out;
  if (const auto seed = top.unsigned_integer("seed", false)) config.seed = *seed;

  if (const json* node = top.raw("hom", false)) {
    Reader r(*node, "hom", errors);
    if (const auto n = r.unsigned_integer("n_delays", false)) {
      if (*n < 1) r.fail("hom.n_delays", "must be at least 1");
      config.hom.n_delays = static_cast<std::size_t>(*n);
    }
    config.hom.max_delay = r.number("max_delay", false, true);
    r.finish();
  }
  if (const json* node = top.raw("codes", false)) {
    Reader r(*node, "codes", errors);
    CodesOptions c;
    const auto kind = r.string("kind", true).value_or("gkp");
    if (kind != "gkp" && kind != "cat") r.fail("codes.kind", "must be \"gkp\" or \"cat\"");
    c.spec = read_code_spec(r, kind == "cat" ? CodeKind::Cat : CodeKind::Gkp, kind == "cat");
    const auto sigma_mu = r.number("sigma_mu", false);
    const auto sigma_s = r.number("sigma_s", false);
    if (sigma_mu && *sigma_mu < 0.0) r.fail("codes.sigma_mu", "must be non-negative");
    if (sigma_s && *sigma_s < 0.0) r.fail("codes.sigma_s", "must be non-negative");
    c.sigma_mu = sigma_mu.value_or(0.0);
    c.sigma_s = sigma_s.value_or(0.0);
    if (const auto trials = r.unsigned_integer("trials", false)) {
      if (*trials < 1) r.fail("codes.trials", "must be at least 1");
      c.trials = static_cast<std::size_t>(*trials);
    }
    r.finish();
    config.codes = c;
  }
  if (const json* node = top.raw("schmidt", false)) {
    Reader r(*node, "schmidt", errors);
    if (const auto n = r.unsigned_integer("entangled_n", false)) {
      if (*n < 1) r.fail("schmidt.entangled_n", "must be at least 1");
      config.entangled_n = static_cast<std::size_t>(*n);
    }
    r.finish();
  }
  top.finish();

  if (source) {
    const auto more = analysis_errors(config);
    errors.insert(errors.end(), more.begin(), more.end());
  }
  if (!errors.empty()) throw ConfigError(std::move(errors));
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"config file not found: " + path.string()});
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.parent_path().empty() ? "." : path.parent_path());
}

}  // namespace tfcv::runner
