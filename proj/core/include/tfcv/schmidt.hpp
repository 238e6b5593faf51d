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

#ifndef TFCV_SCHMIDT_HPP
#define TFCV_SCHMIDT_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tfcv/states.hpp"

namespace tfcv {

/// JSA(omega_s, omega_i) = sum_n coefficients[n] f_n(omega_s) g_n(omega_i).
struct SchmidtDecomposition {
  Eigen::VectorXd coefficients;  ///< non-increasing, sum of squares 1
  std::vector<SpectralAmplitude> signal_modes;
  std::vector<SpectralAmplitude> idler_modes;

  std::size_t rank() const { return static_cast<std::size_t>(coefficients.size()); }
};

inline constexpr double kSchmidtCutoff = 1e-12;

/// SVD of JSA * sqrt(d omega_s d omega_i). Coefficients below
/// relative_cutoff * Lambda_1 are dropped; max_rank keeps only the leading
/// terms (no renormalization).
SchmidtDecomposition schmidt_decompose(const JointSpectralAmplitude& jsa,
                                       std::optional<std::size_t> max_rank = std::nullopt,
                                       double relative_cutoff = kSchmidtCutoff);

/// K = 1 / sum lambda_n^2 with lambda_n = Lambda_n^2 / sum Lambda^2.
double schmidt_number(std::span<const double> coefficients);
double schmidt_number(const SchmidtDecomposition& decomposition);

/// True iff the Schmidt number of the leading n terms exceeds 1 + 1e-6.
/// Throws std::invalid_argument for n < 1.
bool entangled_flag(const SchmidtDecomposition& decomposition, std::size_t n);

/// sum_n Lambda_n f_n g_n on the signal x idler grid.
ComplexMatrix reconstruct(const SchmidtDecomposition& decomposition);

struct SeparationResult {
  JointSpectralAmplitude state;
  double before_k;
  double after_k;
};

/// Applies freq_beam_splitter and reports the Schmidt number before and after.
SeparationResult bloch_messiah_separate(const JointSpectralAmplitude& jsa, Guard guard = Guard::Enforce);

}  // namespace tfcv

#endif  // TFCV_SCHMIDT_HPP
