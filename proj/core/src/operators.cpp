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

#include "tfcv/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace tfcv {

Eigen::VectorXcd apply_frequency_operator(const FrequencyGrid& grid, const Eigen::VectorXcd& v) {
  if (static_cast<std::size_t>(v.size()) != grid.size()) {
    throw std::invalid_argument("sample vector length does not match grid");
  }
  return v.cwiseProduct(grid.frequencies().cast<Complex>());
}

Eigen::VectorXcd apply_time_operator(const FrequencyGrid& grid, const Eigen::VectorXcd& v) {
  Eigen::VectorXcd temporal = frequency_to_time(grid, v);
  temporal = temporal.cwiseProduct(grid.times().cast<Complex>());
  return time_to_frequency(grid, temporal);
}

double commutator_residual(const SpectralAmplitude& psi) {
  const FrequencyGrid& g = psi.grid();
  const Eigen::VectorXcd& v = psi.amplitudes();
  const Eigen::VectorXcd wt = apply_frequency_operator(g, apply_time_operator(g, v));
  const Eigen::VectorXcd tw = apply_time_operator(g, apply_frequency_operator(g, v));
  const Eigen::VectorXcd residual = wt - tw - Complex(0.0, 1.0) * v;
  return std::sqrt(residual.squaredNorm() * g.spacing());
}

}  // namespace tfcv
