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

#ifndef TFCV_SERIALIZATION_HPP
#define TFCV_SERIALIZATION_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tfcv/states.hpp"

namespace tfcv {

// JSON layouts:
//   grid:  {"n_points": int, "spacing": float, "center": float}
//   state: {"grid": grid, "re": [...], "im": [...]}
//   JSA:   {"signal_grid": grid, "idler_grid": grid,
//           "layout": "row-major-signal-idler", "re": [...], "im": [...]}
// Parsers throw FormatError on malformed input.

std::string grid_to_json(const FrequencyGrid& grid);
FrequencyGrid grid_from_json(std::string_view text);

std::string state_to_json(const SpectralAmplitude& state);
SpectralAmplitude state_from_json(std::string_view text);

std::string jsa_to_json(const JointSpectralAmplitude& jsa);
JointSpectralAmplitude jsa_from_json(std::string_view text);

/// printf("%.17g"), so values round-trip exactly.
std::string format_number(double value);

/// One row per index: header, then the columns side by side.
void write_csv_columns(std::ostream& out, const std::vector<std::string>& header,
                       const std::vector<Eigen::VectorXd>& columns);

/// Long format: one row (x_r, y_c, values(r, c)) per cell, x outermost.
void write_csv_table(std::ostream& out, const std::vector<std::string>& header, const Eigen::VectorXd& x,
                     const Eigen::VectorXd& y, const Eigen::MatrixXd& values);

}  // namespace tfcv

#endif  // TFCV_SERIALIZATION_HPP
