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

#ifndef TFCV_FOURIER_HPP
#define TFCV_FOURIER_HPP

#include <complex>
#include <span>

#include <Eigen/Dense>

#include "tfcv/grid.hpp"

namespace tfcv {

using Complex = std::complex<double>;

enum class Direction { Forward, Inverse };

/// In-place unitary DFT on a centred axis:
///
///   Forward: X_j = N^{-1/2} sum_k x_k exp(-2 pi i (k - N/2)(j - N/2) / N)
///   Inverse: the adjoint, with exp(+...).
///
/// With omega_k t_j = 2 pi (k - N/2)(j - N/2) / N this is the e^{-i omega t}
/// kernel on physically ordered axes. The length must be a multiple of 4.
/// Reentrant; FFTW plans are created once per length under a lock.
void centered_dft(std::span<Complex> data, Direction direction);

/// Applies centered_dft to every row (axis 1) or every column (axis 0).
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
void centered_dft_rows(ComplexMatrix& m, Direction direction);
void centered_dft_cols(ComplexMatrix& m, Direction direction);

/// Frequency-domain samples S(omega_k) -> time-domain samples S~(t_j) of the
/// continuous transform S~(t) = (2 pi)^{-1/2} int S(omega) e^{-i omega t}.
/// Equals centered_dft scaled by sqrt(spacing / dt), so that
/// sum |S|^2 d omega = sum |S~|^2 dt.
Eigen::VectorXcd frequency_to_time(const FrequencyGrid& grid, const Eigen::VectorXcd& spectral);
Eigen::VectorXcd time_to_frequency(const FrequencyGrid& grid, const Eigen::VectorXcd& temporal);

/// Which representation a vector (or matrix axis) is sampled in.
enum class Domain { Frequency, Time };

/// Band-limited interpolation of centred samples onto an axis of twice the
/// density (length 2N, point p at (p - N) * step / 2). Even output points
/// coincide with the input samples. Implemented by zero padding in the
/// conjugate domain.
Eigen::VectorXcd interpolate_half_step(const Eigen::VectorXcd& samples, Domain domain);

/// Index reversal about the centre, k -> (N - k) mod N; maps omega to -omega.
Eigen::VectorXcd reflect(const Eigen::VectorXcd& samples);

}  // namespace tfcv

#endif  // TFCV_FOURIER_HPP
