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

#ifndef TFCV_PHASESPACE_HPP
#define TFCV_PHASESPACE_HPP

#include <optional>
#include <span>

#include <Eigen/Dense>

#include "tfcv/states.hpp"

namespace tfcv {

// Wigner convention (rho(a, b) = S(a) S*(b)):
//
//   W(mu, tau) = (1/pi) int d omega e^{2 i omega tau} rho(mu - omega, mu + omega)
//              = (1/pi) int dx e^{-2 i mu x} rho~(tau - x, tau + x),
//
// so that int W dtau = |S(mu)|^2, int W dmu = |S~(tau)|^2 and
// pi W(mu, tau) = <Pi(mu, tau)>.

/// W sampled on the grid's frequency (rows) and time (columns) axes.
struct WignerMap {
  Eigen::VectorXd mu_axis;
  Eigen::VectorXd tau_axis;
  Eigen::MatrixXd values;
  double imaginary_residual = 0.0;  ///< largest |Im W| discarded

  /// sum W d mu d tau.
  double integral() const;
};

/// Tr(rho Pi) with Pi: S(omega) -> S(-omega) about the grid centre. Throws
/// SupportGuardError when the unpaired edge bin carries more than the guard
/// mass.
double parity_expectation(const SpectralAmplitude& psi);
double parity_expectation(const SpectralDensityMatrix& rho);

/// <Pi(mu, tau)> = <D Pi D^dagger> with D = D_t(mu) D_omega(tau), evaluated by
/// displacing the state with the gate implementations.
double displaced_parity(const SpectralAmplitude& psi, double mu, double tau, Guard guard = Guard::Enforce);
double displaced_parity(const SpectralDensityMatrix& rho, double mu, double tau, Guard guard = Guard::Enforce);

/// Band-limited evaluation on a twice-refined grid, one transform per mu.
WignerMap wigner(const SpectralAmplitude& psi, Guard guard = Guard::Enforce);
WignerMap wigner(const SpectralDensityMatrix& rho, Guard guard = Guard::Enforce);

/// 2 pi sum W^2 d mu d tau.
double purity_from_wigner(const WignerMap& map);

// --- Two-photon phase space -------------------------------------------------

enum class PhaseVariable { SignalFrequency, SignalTime, IdlerFrequency, IdlerTime };

struct FixedVariable {
  PhaseVariable variable;
  double value;
};

/// Two-photon Wigner W(mu_s, tau_s, mu_i, tau_i) restricted to the plane
/// where two variables are held fixed. Rows follow the first free variable
/// in the order (mu_s, tau_s, mu_i, tau_i), columns the second.
struct WignerSlice {
  PhaseVariable row_variable;
  PhaseVariable col_variable;
  Eigen::VectorXd row_axis;
  Eigen::VectorXd col_axis;
  Eigen::MatrixXd values;
  double imaginary_residual = 0.0;
};

/// Throws std::invalid_argument if the same variable is fixed twice.
WignerSlice two_photon_wigner_slice(const JointSpectralAmplitude& jsa, FixedVariable a, FixedVariable b,
                                    Guard guard = Guard::Enforce);

/// The four intensity marginals of a pair, all as densities:
/// jsi(omega_s, omega_i), jti(t_s, t_i), jtsi_ts_wi(t_s, omega_i),
/// jtsi_ti_ws(omega_s, t_i).
struct TwoPhotonMarginals {
  Eigen::MatrixXd jsi;
  Eigen::MatrixXd jti;
  Eigen::MatrixXd jtsi_ts_wi;
  Eigen::MatrixXd jtsi_ti_ws;
};

TwoPhotonMarginals two_photon_marginals(const JointSpectralAmplitude& jsa);

// --- Hong-Ou-Mandel ---------------------------------------------------------

/// P_c(dt) = (1 - Re sum JSA(ws, wi) JSA*(wi, ws) e^{i (ws - wi) dt} dws dwi) / 2.
/// Requires identical signal and idler grids.
Eigen::VectorXd hom_coincidence(const JointSpectralAmplitude& jsa, std::span<const double> delays);

inline constexpr std::size_t kDefaultHomDelays = 201;
inline constexpr double kDefaultHomReach = 5.0;

/// kDefaultHomDelays delays over +-kDefaultHomReach times the RMS width of
/// t_s - t_i.
Eigen::VectorXd default_hom_delays(const JointSpectralAmplitude& jsa);

/// True iff max P_c over the delays exceeds 1/2 + 1e-6.
bool hom_entanglement_witness(const JointSpectralAmplitude& jsa,
                              std::optional<std::span<const double>> delays = std::nullopt);

}  // namespace tfcv

#endif  // TFCV_PHASESPACE_HPP
