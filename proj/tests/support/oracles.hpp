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


// Independent reference computations for the test suite. Everything here is
// written directly from the defining sums, without the library's transforms.

#ifndef TFCV_TESTS_ORACLES_HPP
#define TFCV_TESTS_ORACLES_HPP

#include <cstddef>
#include <random>

#include <Eigen/Dense>

#include "tfcv/codes.hpp"
#include "tfcv/states.hpp"

namespace tfcv::testing {

/// S~(t_j) = (2 pi)^{-1/2} sum_k S(omega_k) e^{-i omega_k t_j} d omega.
Eigen::VectorXcd direct_time_amplitude(const FrequencyGrid& grid, const Eigen::VectorXcd& spectral);

/// Inverse of direct_time_amplitude evaluated at an arbitrary frequency.
Complex band_limited_value(const FrequencyGrid& grid, const Eigen::VectorXcd& temporal, double omega);

/// (1/pi) int d omega e^{2 i omega tau} S(mu - omega) S*(mu + omega) by a
/// half-step Riemann sum over band-limited values.
double direct_wigner(const SpectralAmplitude& psi, double mu, double tau);

/// Wigner function of gaussian_state(center, width, 0).
double gaussian_wigner(double center, double width, double mu, double tau);

/// JSA(x, y) -> JSA((x - y)/sqrt2, (x + y)/sqrt2) by bilinear interpolation
/// of the samples; zero outside the grid. Second-order accurate in the
/// spacing.
ComplexMatrix bilinear_rotation(const JointSpectralAmplitude& jsa);

/// Participation ratio from a Jacobi SVD of the weighted amplitude matrix.
double jacobi_schmidt_number(const JointSpectralAmplitude& jsa);

/// 1 / Tr(rho_s^2) of the reduced signal state.
double reduced_purity_schmidt_number(const JointSpectralAmplitude& jsa);

/// (r + 1/r) / 2.
double gaussian_jsa_schmidt_number(double ratio);

/// Probability that a N(0, sigma) frequency shift lands nearer the wrong
/// GKP lattice point.
double gkp_gaussian_tail(double spacing, double sigma);

/// Chirped Gaussian with centre, width and chirp drawn uniformly.
SpectralAmplitude random_chirped_gaussian(std::mt19937_64& rng, const FrequencyGrid& grid,
                                          double max_center = 3.0, double min_width = 0.6,
                                          double max_width = 1.4, double max_chirp = 0.25);

/// Either a chirped Gaussian or a normalized superposition of two.
SpectralAmplitude random_state(std::mt19937_64& rng, const FrequencyGrid& grid);

}  // namespace tfcv::testing

#endif  // TFCV_TESTS_ORACLES_HPP
