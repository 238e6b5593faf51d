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

#include "tfcv/serialization.hpp"

#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "tfcv/error.hpp"

namespace tfcv {
namespace {

using nlohmann::json;

constexpr std::string_view kJsaLayout = "row-major-signal-idler";

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

json grid_json(const FrequencyGrid& g) {
  return {{"n_points", g.size()}, {"spacing", g.spacing()}, {"center", g.center()}};
}

FrequencyGrid grid_from(const json& j) {
  if (!j.is_object() || !j.contains("n_points") || !j.contains("spacing")) {
    throw FormatError("grid needs \"n_points\" and \"spacing\"");
  }
  if (!j["n_points"].is_number_unsigned() || !j["spacing"].is_number()) {
    throw FormatError("grid fields have the wrong type");
  }
  const double center = j.contains("center") ? j["center"].get<double>() : 0.0;
  try {
    return FrequencyGrid(j["n_points"].get<std::size_t>(), j["spacing"].get<double>(), center);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::vector<Complex> samples_from(const json& j, std::size_t expected) {
  if (!j.contains("re") || !j.contains("im") || !j["re"].is_array() || !j["im"].is_array()) {
    throw FormatError("amplitudes need \"re\" and \"im\" arrays");
  }
  const auto& re = j["re"];
  const auto& im = j["im"];
  if (re.size() != expected || im.size() != expected) {
    throw FormatError("expected " + std::to_string(expected) + " amplitude samples");
  }
  std::vector<Complex> out(expected);
  for (std::size_t k = 0; k < expected; ++k) {
    if (!re[k].is_number() || !im[k].is_number()) throw FormatError("amplitude samples must be numbers");
    out[k] = {re[k].get<double>(), im[k].get<double>()};
  }
  return out;
}

template <typename Container>
json split(const Container& values, bool imaginary) {
  json out = json::array();
  for (const Complex& c : values) out.push_back(imaginary ? c.imag() : c.real());
  return out;
}

}  // namespace

std::string grid_to_json(const FrequencyGrid& grid) { return grid_json(grid).dump(); }

FrequencyGrid grid_from_json(std::string_view text) { return grid_from(parse(text)); }

std::string state_to_json(const SpectralAmplitude& state) {
  const auto& a = state.amplitudes();
  const std::vector<Complex> v(a.data(), a.data() + a.size());
  return json{{"grid", grid_json(state.grid())}, {"re", split(v, false)}, {"im", split(v, true)}}.dump();
}

SpectralAmplitude state_from_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("grid")) throw FormatError("state needs a \"grid\"");
  FrequencyGrid grid = grid_from(j["grid"]);
  const auto samples = samples_from(j, grid.size());
  Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(samples.data(), static_cast<Eigen::Index>(samples.size()));
  try {
    return SpectralAmplitude(grid, std::move(v));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string jsa_to_json(const JointSpectralAmplitude& jsa) {
  const ComplexMatrix& m = jsa.amplitudes();
  const std::vector<Complex> v(m.data(), m.data() + m.size());
  return json{{"signal_grid", grid_json(jsa.signal_grid())},
              {"idler_grid", grid_json(jsa.idler_grid())},
              {"layout", kJsaLayout},
              {"re", split(v, false)},
              {"im", split(v, true)}}
      .dump();
}

JointSpectralAmplitude jsa_from_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("signal_grid") || !j.contains("idler_grid")) {
    throw FormatError("JSA needs \"signal_grid\" and \"idler_grid\"");
  }
  if (!j.contains("layout") || j["layout"] != kJsaLayout) {
    throw FormatError("JSA layout must be \"" + std::string(kJsaLayout) + "\"");
  }
  FrequencyGrid gs = grid_from(j["signal_grid"]);
  FrequencyGrid gi = grid_from(j["idler_grid"]);
  const auto samples = samples_from(j, gs.size() * gi.size());
  ComplexMatrix m = Eigen::Map<const ComplexMatrix>(samples.data(), static_cast<Eigen::Index>(gs.size()),
                                                    static_cast<Eigen::Index>(gi.size()));
  try {
    return JointSpectralAmplitude(gs, gi, std::move(m));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_csv_columns(std::ostream& out, const std::vector<std::string>& header,
                       const std::vector<Eigen::VectorXd>& columns) {
  if (header.size() != columns.size()) throw std::invalid_argument("header and column counts differ");
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << '\n';
  const Eigen::Index rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& col : columns) {
    if (col.size() != rows) throw std::invalid_argument("CSV columns differ in length");
  }
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << format_number(columns[c][r]);
    out << '\n';
  }
}

void write_csv_table(std::ostream& out, const std::vector<std::string>& header, const Eigen::VectorXd& x,
                     const Eigen::VectorXd& y, const Eigen::MatrixXd& values) {
  if (header.size() != 3) throw std::invalid_argument("table CSV needs three column names");
  if (values.rows() != x.size() || values.cols() != y.size()) {
    throw std::invalid_argument("table axes do not match the value matrix");
  }
  out << header[0] << ',' << header[1] << ',' << header[2] << '\n';
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
      out << format_number(x[r]) << ',' << format_number(y[c]) << ',' << format_number(values(r, c)) << '\n';
    }
  }
}

}  // namespace tfcv
