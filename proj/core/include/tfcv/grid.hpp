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

#ifndef TFCV_GRID_HPP
#define TFCV_GRID_HPP

#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace tfcv {

/// Uniform axis of relative (dimensionless) angular frequencies.
///
/// Point k sits at omega_k = (k - N/2) * spacing, so the reference frequency
/// is at index N/2. The conjugate time axis has dt = 2 pi / (N * spacing) and
/// t_j = (j - N/2) * dt. `center` only labels the reference frequency; no
/// arithmetic uses it.
class FrequencyGrid {
 public:
  /// Throws std::invalid_argument unless n_points is a power of two >= 8
  /// and spacing is finite and positive.
  FrequencyGrid(std::size_t n_points, double spacing, double center = 0.0);

  /// Grid whose time and frequency spacings coincide, sqrt(2 pi / N).
  static FrequencyGrid balanced(std::size_t n_points, double center = 0.0);

  std::size_t size() const { return n_points_; }
  double spacing() const { return spacing_; }
  double center() const { return center_; }
  double time_spacing() const;

  double frequency(std::size_t k) const;
  double time(std::size_t j) const;
  Eigen::VectorXd frequencies() const;
  Eigen::VectorXd times() const;

  /// Full extent N * spacing of the frequency axis (one period).
  double span() const { return static_cast<double>(n_points_) * spacing_; }
  /// Full extent N * dt of the time axis (one period).
  double time_span() const;

  /// Index of omega = 0.
  std::size_t origin() const { return n_points_ / 2; }

  friend bool operator==(const FrequencyGrid& a, const FrequencyGrid& b) {
    return a.n_points_ == b.n_points_ && a.spacing_ == b.spacing_ && a.center_ == b.center_;
  }

 private:
  std::size_t n_points_;
  double spacing_;
  double center_;
};

FrequencyGrid make_grid(std::size_t n_points, double spacing, double center = 0.0);

/// States may keep at most this much probability outside the central band.
inline constexpr double kSupportGuardMass = 1e-4;
/// Fraction of each axis that counts as the central band.
inline constexpr double kCentralBandFraction = 0.8;

/// True when axis point `index` of an n-point centred axis lies in the
/// central 80% band, |index - n/2| <= 0.4 n.
bool in_central_band(std::size_t index, std::size_t n_points);

/// Probability (density * measure summed) outside the central band.
/// `density` must already include the bin measure, i.e. sum to ~1.
double out_of_band_mass(std::span<const double> probabilities);

}  // namespace tfcv

#endif  // TFCV_GRID_HPP
