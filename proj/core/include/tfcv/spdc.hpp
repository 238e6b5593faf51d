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

#ifndef TFCV_SPDC_HPP
#define TFCV_SPDC_HPP

#include <functional>

#include "tfcv/states.hpp"

namespace tfcv {

/// Factorized Gaussian source in the rotated coordinates
/// omega_pm = ((omega_s - c_s) +- (omega_i - c_i)) / sqrt(2).
struct GaussianJsaSpec {
  double delta_plus = 1.0;   ///< intensity width along omega_+
  double delta_minus = 1.0;  ///< intensity width along omega_-
  double center_s = 0.0;
  double center_i = 0.0;

  /// r = delta_plus / delta_minus; r < 1 means anti-correlated frequencies.
  double ratio() const { return delta_plus / delta_minus; }
};

/// JSA ~ exp(-omega_+^2 / (4 delta_+^2)) exp(-omega_-^2 / (4 delta_-^2)),
/// real and positive. Throws SupportGuardError if the 4-sigma ellipse leaves
/// either grid.
JointSpectralAmplitude gaussian_jsa(const GaussianJsaSpec& spec, const FrequencyGrid& signal_grid,
                                    const FrequencyGrid& idler_grid);

using SpectralFunction = std::function<Complex(double)>;

/// JSA ~ pump(omega_s + omega_i) * phasematching(omega_s - omega_i), both
/// evaluated pointwise on the grid.
JointSpectralAmplitude jsa_from_pump_phasematching(const SpectralFunction& pump,
                                                   const SpectralFunction& phasematching,
                                                   const FrequencyGrid& signal_grid,
                                                   const FrequencyGrid& idler_grid);

/// Principal axes of the joint spectral intensity from its covariance.
struct JsiPrincipalAxes {
  double major_width;  ///< larger standard deviation
  double minor_width;
  double major_angle;  ///< angle of the major axis from the omega_s axis, in (-pi/2, pi/2]
  double correlation;  ///< Pearson coefficient of omega_s and omega_i
};

JsiPrincipalAxes jsi_principal_axes(const JointSpectralAmplitude& jsa);

}  // namespace tfcv

#endif  // TFCV_SPDC_HPP
