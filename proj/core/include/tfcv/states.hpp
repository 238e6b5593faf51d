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

#ifndef TFCV_STATES_HPP
#define TFCV_STATES_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tfcv/fourier.hpp"
#include "tfcv/grid.hpp"

namespace tfcv {

/// Whether an operation checks the support guard. Skipping is meant for
/// noise channels and hand-built edge cases, not for ordinary use.
enum class Guard { Enforce, Skip };

/// Pure single-photon state: samples of S(omega) with sum |S|^2 d omega = 1.
class SpectralAmplitude {
 public:
  /// Throws std::invalid_argument if the length is wrong or the norm differs
  /// from one by more than 1e-10.
  SpectralAmplitude(FrequencyGrid grid, Eigen::VectorXcd amplitudes);

  /// Rescales `amplitudes` to unit norm first. Throws on a zero vector.
  static SpectralAmplitude normalized(FrequencyGrid grid, Eigen::VectorXcd amplitudes);

  const FrequencyGrid& grid() const { return grid_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex operator[](Eigen::Index k) const { return amplitudes_[k]; }

  /// |S(omega_k)|^2 (a density; multiply by the spacing for probabilities).
  Eigen::VectorXd spectral_intensity() const;
  /// |S~(t_j)|^2.
  Eigen::VectorXd temporal_intensity() const;

  double norm() const;

 private:
  FrequencyGrid grid_;
  Eigen::VectorXcd amplitudes_;
};

/// Mixed single-photon state rho(omega_k, omega_l): Hermitian, positive,
/// trace * spacing = 1.
class SpectralDensityMatrix {
 public:
  /// Checks shape, hermiticity (1e-12) and trace (1e-10). Positivity is
  /// checked by validate().
  SpectralDensityMatrix(FrequencyGrid grid, Eigen::MatrixXcd matrix);

  const FrequencyGrid& grid() const { return grid_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  /// Full check including the spectrum; throws std::invalid_argument.
  void validate() const;

 private:
  FrequencyGrid grid_;
  Eigen::MatrixXcd matrix_;
};

/// Pure photon pair JSA(omega_s, omega_i); rows index the signal frequency,
/// columns the idler. Normalized with the product measure.
class JointSpectralAmplitude {
 public:
  JointSpectralAmplitude(FrequencyGrid signal_grid, FrequencyGrid idler_grid, ComplexMatrix amplitudes);

  static JointSpectralAmplitude normalized(FrequencyGrid signal_grid, FrequencyGrid idler_grid,
                                           ComplexMatrix amplitudes);

  const FrequencyGrid& signal_grid() const { return signal_grid_; }
  const FrequencyGrid& idler_grid() const { return idler_grid_; }
  const ComplexMatrix& amplitudes() const { return amplitudes_; }

  double norm() const;

 private:
  FrequencyGrid signal_grid_;
  FrequencyGrid idler_grid_;
  ComplexMatrix amplitudes_;
};

// --- Transforms ------------------------------------------------------------

/// S~(t_j) = (2 pi)^{-1/2} int S(omega) e^{-i omega t_j} d omega, sampled on
/// the conjugate axis. Preserves sum |.|^2 * measure.
Eigen::VectorXcd to_time_domain(const SpectralAmplitude& state);
SpectralAmplitude from_time_domain(const FrequencyGrid& grid, const Eigen::VectorXcd& temporal);

/// Amplitude with each photon in the requested representation. Rows stay
/// signal, columns idler.
ComplexMatrix joint_amplitude_in(const JointSpectralAmplitude& jsa, Domain signal, Domain idler);

/// Joint temporal amplitude JTA(t_s, t_i).
ComplexMatrix joint_temporal_amplitude(const JointSpectralAmplitude& jsa);

// --- Support guard ---------------------------------------------------------

/// Largest out-of-band probability over the frequency and time axes.
double out_of_band_mass(const SpectralAmplitude& state);
double out_of_band_mass(const JointSpectralAmplitude& jsa);

/// Throws SupportGuardError naming `context` if the out-of-band mass exceeds
/// kSupportGuardMass.
void require_support(const SpectralAmplitude& state, std::string_view context);
void require_support(const JointSpectralAmplitude& jsa, std::string_view context);

// --- Constructors and analysis --------------------------------------------

/// S(omega) ~ exp(-(omega - c)^2 / (4 w^2)) exp(i chirp (omega - c)^2).
/// The spectral intensity has standard deviation `width`. Throws
/// SupportGuardError if c +- 4 w leaves the frequency axis.
SpectralAmplitude gaussian_state(const FrequencyGrid& grid, double center, double width,
                                 double chirp = 0.0);

/// Normalized a psi1 + b psi2. Throws Error if the combination vanishes.
SpectralAmplitude superposition(Complex a, const SpectralAmplitude& psi1, Complex b,
                                const SpectralAmplitude& psi2);

struct Moments {
  double mean_frequency;
  double frequency_width;
  double mean_time;
  double time_width;
};

/// First and second moments of the spectral and temporal intensities by
/// midpoint sums. Enforces the support guard.
Moments moments(const SpectralAmplitude& state, Guard guard = Guard::Enforce);

/// <psi|phi> with the grid measure.
Complex overlap(const SpectralAmplitude& psi, const SpectralAmplitude& phi);
/// |<psi|phi>|^2. Throws GridMismatchError for different grids.
double fidelity(const SpectralAmplitude& psi, const SpectralAmplitude& phi);

SpectralDensityMatrix to_density(const SpectralAmplitude& state);
/// sum_k w_k |psi_k><psi_k|. Weights must be non-negative and sum to 1.
SpectralDensityMatrix mix(std::span<const double> weights, std::span<const SpectralAmplitude> states);
/// Tr(rho^2) with the grid measure.
double purity(const SpectralDensityMatrix& rho);

JointSpectralAmplitude product_jsa(const SpectralAmplitude& signal, const SpectralAmplitude& idler);

/// Single-photon spectral intensities of the signal and idler.
std::pair<Eigen::VectorXd, Eigen::VectorXd> jsa_marginals(const JointSpectralAmplitude& jsa);

}  // namespace tfcv

#endif  // TFCV_STATES_HPP
