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

#include "tfcv/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tfcv {

FrequencyGrid::FrequencyGrid(std::size_t n_points, double spacing, double center)
    : n_points_(n_points), spacing_(spacing), center_(center) {
  if (n_points < 8 || !std::has_single_bit(n_points)) {
    throw std::invalid_argument("grid size must be a power of two >= 8, got " +
                                std::to_string(n_points));
  }
  if (!std::isfinite(spacing) || spacing <= 0.0) {
    throw std::invalid_argument("grid spacing must be positive and finite");
  }
  if (!std::isfinite(center)) {
    throw std::invalid_argument("grid center must be finite");
  }
}

FrequencyGrid FrequencyGrid::balanced(std::size_t n_points, double center) {
  return FrequencyGrid(n_points, std::sqrt(2.0 * std::numbers::pi / static_cast<double>(n_points)),
                       center);
}

double FrequencyGrid::time_spacing() const {
  return 2.0 * std::numbers::pi / (static_cast<double>(n_points_) * spacing_);
}

double FrequencyGrid::time_span() const {
  return static_cast<double>(n_points_) * time_spacing();
}

double FrequencyGrid::frequency(std::size_t k) const {
  return (static_cast<double>(k) - static_cast<double>(n_points_ / 2)) * spacing_;
}

double FrequencyGrid::time(std::size_t j) const {
  return (static_cast<double>(j) - static_cast<double>(n_points_ / 2)) * time_spacing();
}

Eigen::VectorXd FrequencyGrid::frequencies() const {
  Eigen::VectorXd axis(static_cast<Eigen::Index>(n_points_));
  for (std::size_t k = 0; k < n_points_; ++k) axis[static_cast<Eigen::Index>(k)] = frequency(k);
  return axis;
}

Eigen::VectorXd FrequencyGrid::times() const {
  Eigen::VectorXd axis(static_cast<Eigen::Index>(n_points_));
  for (std::size_t j = 0; j < n_points_; ++j) axis[static_cast<Eigen::Index>(j)] = time(j);
  return axis;
}

FrequencyGrid make_grid(std::size_t n_points, double spacing, double center) {
  return FrequencyGrid(n_points, spacing, center);
}

bool in_central_band(std::size_t index, std::size_t n_points) {
  const double offset = std::abs(static_cast<double>(index) - static_cast<double>(n_points / 2));
  return offset <= 0.5 * kCentralBandFraction * static_cast<double>(n_points);
}

double out_of_band_mass(std::span<const double> probabilities) {
  double outside = 0.0;
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    if (!in_central_band(k, probabilities.size())) outside += probabilities[k];
  }
  return outside;
}

}  // namespace tfcv
