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

#ifndef TFCV_OPERATORS_HPP
#define TFCV_OPERATORS_HPP

#include <Eigen/Dense>

#include "tfcv/states.hpp"

namespace tfcv {

/// omega-hat: multiplication by omega_k in the frequency representation.
Eigen::VectorXcd apply_frequency_operator(const FrequencyGrid& grid, const Eigen::VectorXcd& v);

/// t-hat: multiplication by t_j in the time representation, conjugated back
/// through the centered transform. Acts as -i d/domega on smooth states.
Eigen::VectorXcd apply_time_operator(const FrequencyGrid& grid, const Eigen::VectorXcd& v);

/// || (omega t - t omega) psi - i psi ||, with the grid measure. Vanishes to
/// truncation error for support-guarded states.
double commutator_residual(const SpectralAmplitude& psi);

}  // namespace tfcv

#endif  // TFCV_OPERATORS_HPP
