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

#ifndef TFCV_GATES_HPP
#define TFCV_GATES_HPP

#include <functional>

#include "tfcv/kernels.hpp"
#include "tfcv/states.hpp"

namespace tfcv {

// Conventions. omega and t satisfy [omega, t] = i. The displacement gates
// are D_omega(s) = exp(i omega s) (shifts arrival time by +s) and
// D_t(mu) = exp(-i mu t) (shifts frequency by +mu). They obey
//
//   D_omega(s) D_t(mu) = exp(i s mu) D_t(mu) D_omega(s),
//
// i.e. the exchange phase is s * mu with unsymmetrized exponentials. Every
// gate is the exact operator, global phase included.

/// Coefficient c in D_omega(s) D_t(mu) = exp(i c s mu) D_t(mu) D_omega(s).
inline constexpr double kWeylPhaseFactor = 1.0;

// --- Single-photon gates ----------------------------------------------------

/// exp(i omega s).
SpectralAmplitude time_displace(const SpectralAmplitude& psi, double s, Guard guard = Guard::Enforce);

/// exp(-i mu t): S(omega) -> S(omega - mu), computed as a phase ramp in the
/// time domain so any real mu is exact.
SpectralAmplitude freq_displace(const SpectralAmplitude& psi, double mu, Guard guard = Guard::Enforce);

/// Same operator by cyclic index shift; mu must be an integer number of bins.
SpectralAmplitude freq_displace_by_bins(const SpectralAmplitude& psi, double mu,
                                        Guard guard = Guard::Enforce);

/// exp(i theta (omega^2 + t^2) / 2), built from two frequency chirps around
/// one temporal chirp. frac_fourier(pi/2) == fourier. Composes additively in
/// theta; a full turn gives -1.
SpectralAmplitude frac_fourier(const SpectralAmplitude& psi, double theta, Guard guard = Guard::Enforce);

/// exp(i pi/4 (omega^2 + t^2)). Maps the frequency profile to the temporal
/// one: F^dagger omega F = -t, F omega F^dagger = t.
SpectralAmplitude fourier(const SpectralAmplitude& psi, Guard guard = Guard::Enforce);
SpectralAmplitude inverse_fourier(const SpectralAmplitude& psi, Guard guard = Guard::Enforce);

/// S(omega) -> S(-omega) about the grid centre.
SpectralAmplitude parity(const SpectralAmplitude& psi);

/// exp(i s omega^2).
SpectralAmplitude quad_phase(const SpectralAmplitude& psi, double s);
/// exp(i gamma omega^3).
SpectralAmplitude cubic_phase(const SpectralAmplitude& psi, double gamma);
/// exp(i f(omega)); throws std::invalid_argument if f is not finite on the grid.
SpectralAmplitude diag_phase(const SpectralAmplitude& psi, const std::function<double(double)>& f);

// --- Two-photon gates -------------------------------------------------------

enum class Photon { Signal = 0, Idler = 1 };

/// Applies a single-photon kernel to one photon of the pair.
using LocalKernel = std::function<void(const FrequencyGrid&, Eigen::VectorXcd&)>;
JointSpectralAmplitude apply_local(const JointSpectralAmplitude& jsa, Photon photon, const LocalKernel& kernel,
                                   Guard guard = Guard::Enforce);

/// exp(i omega_c t_target): |omega, omega'> -> |omega, omega' - omega> when
/// the target is the idler. Exact phase multiplication in the target's time
/// representation.
JointSpectralAmplitude cond_freq_time(const JointSpectralAmplitude& jsa, Photon target = Photon::Idler,
                                      Guard guard = Guard::Enforce);

/// exp(i omega_s omega_i), diagonal in frequency.
JointSpectralAmplitude cond_freq_freq(const JointSpectralAmplitude& jsa);

/// exp(i pi/4 (omega_s t_i - t_s omega_i)): rotates the joint spectrum,
/// JSA'(x, y) = JSA((x - y)/sqrt2, (x + y)/sqrt2), so a JSA factorized as
/// f(omega_+) g(omega_-) becomes f(omega_s) g(-omega_i). Built from three
/// exact shears. Two applications give JSA(-omega_i, omega_s); eight give the
/// identity. Both grids must be equal. The input must keep its mass within
/// the disc of radius 0.4 * span / sqrt2 in frequency and in time.
JointSpectralAmplitude freq_beam_splitter(const JointSpectralAmplitude& jsa, Guard guard = Guard::Enforce);

/// Probability outside the disc |(omega_s, omega_i)| <= 0.4 span / sqrt2,
/// maximised over the frequency and time representations.
double out_of_disc_mass(const JointSpectralAmplitude& jsa);

// --- Phase bookkeeping ------------------------------------------------------

/// arg <a|b>: the global phase taking a to b when they agree up to phase.
double global_phase(const SpectralAmplitude& a, const SpectralAmplitude& b);

/// min over phi of max_k |a_k e^{i phi} - b_k|, with phi = global_phase(a, b).
double max_distance_up_to_phase(const SpectralAmplitude& a, const SpectralAmplitude& b);

}  // namespace tfcv

#endif  // TFCV_GATES_HPP
