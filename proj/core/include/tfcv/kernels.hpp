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

#ifndef TFCV_KERNELS_HPP
#define TFCV_KERNELS_HPP

#include <functional>

#include <Eigen/Dense>

#include "tfcv/grid.hpp"

// In-place single-photon unitaries acting on frequency-domain sample vectors
// of any norm. The public gates in gates.hpp wrap these with normalization
// and support checks; two-photon code applies them along one matrix axis.
namespace tfcv::kernels {

/// S(omega) -> e^{i omega s} S(omega).
void time_shift(const FrequencyGrid& grid, Eigen::VectorXcd& v, double s);

/// S(omega) -> S(omega - mu), as the phase ramp e^{-i mu t} in the time domain.
void frequency_shift(const FrequencyGrid& grid, Eigen::VectorXcd& v, double mu);

/// S(omega) -> S(omega - m * spacing) by cyclic index rotation.
void frequency_shift_bins(Eigen::VectorXcd& v, long bins);

/// S(omega) -> e^{i f(omega)} S(omega).
void diagonal_phase(const FrequencyGrid& grid, Eigen::VectorXcd& v, const std::function<double(double)>& f);

/// Multiplication by e^{i g(t)} in the time domain.
void temporal_phase(const FrequencyGrid& grid, Eigen::VectorXcd& v, const std::function<double(double)>& g);

/// exp(i theta (omega^2 + t^2) / 2). theta = pi/2 is the Fourier gate.
void fractional_fourier(const FrequencyGrid& grid, Eigen::VectorXcd& v, double theta);

/// S(omega) -> S(-omega).
void parity(Eigen::VectorXcd& v);

}  // namespace tfcv::kernels

#endif  // TFCV_KERNELS_HPP
