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

#include "tfcv/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "tfcv/error.hpp"

namespace tfcv {
namespace {

constexpr double kNormTolerance = 1e-10;

double squared_norm(const Eigen::VectorXcd& v, double measure) { return v.squaredNorm() * measure; }

void check_length(const FrequencyGrid& grid, Eigen::Index length) {
  if (static_cast<std::size_t>(length) != grid.size()) {
    throw std::invalid_argument("amplitude length " + std::to_string(length) +
                                " does not match grid size " + std::to_string(grid.size()));
  }
}

void require_same_grid(const FrequencyGrid& a, const FrequencyGrid& b, std::string_view what) {
  if (!(a == b)) throw GridMismatchError(std::string(what) + ": states live on different grids");
}

std::string guard_message(std::string_view context, double mass) {
  std::ostringstream os;
  os << context << ": " << mass << " of the probability lies outside the central "
     << kCentralBandFraction * 100 << "% of the grid (limit " << kSupportGuardMass << ")";
  return os.str();
}

}  // namespace

SpectralAmplitude::SpectralAmplitude(FrequencyGrid grid, Eigen::VectorXcd amplitudes)
    : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)) {
  check_length(grid_, amplitudes_.size());
  if (!amplitudes_.allFinite()) throw std::invalid_argument("amplitudes must be finite");
  const double n2 = squared_norm(amplitudes_, grid_.spacing());
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("spectral amplitude is not normalized (norm^2 = " +
                                std::to_string(n2) + ")");
  }
}

SpectralAmplitude SpectralAmplitude::normalized(FrequencyGrid grid, Eigen::VectorXcd amplitudes) {
  check_length(grid, amplitudes.size());
  const double n2 = squared_norm(amplitudes, grid.spacing());
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw Error("cannot normalize a zero or non-finite amplitude");
  amplitudes /= std::sqrt(n2);
  return SpectralAmplitude(std::move(grid), std::move(amplitudes));
}

Eigen::VectorXd SpectralAmplitude::spectral_intensity() const { return amplitudes_.cwiseAbs2(); }

Eigen::VectorXd SpectralAmplitude::temporal_intensity() const {
  return frequency_to_time(grid_, amplitudes_).cwiseAbs2();
}

double SpectralAmplitude::norm() const {
  return std::sqrt(squared_norm(amplitudes_, grid_.spacing()));
}

SpectralDensityMatrix::SpectralDensityMatrix(FrequencyGrid grid, Eigen::MatrixXcd matrix)
    : grid_(std::move(grid)), matrix_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(grid_.size());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw std::invalid_argument("density matrix shape does not match grid");
  }
  if (!matrix_.allFinite()) throw std::invalid_argument("density matrix must be finite");
  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  const double trace = matrix_.trace().real() * grid_.spacing();
  if (std::abs(trace - 1.0) > kNormTolerance) {
    throw std::invalid_argument("density matrix trace is " + std::to_string(trace));
  }
}

void SpectralDensityMatrix::validate() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_ * grid_.spacing(),
                                                         Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

JointSpectralAmplitude::JointSpectralAmplitude(FrequencyGrid signal_grid, FrequencyGrid idler_grid,
                                               ComplexMatrix amplitudes)
    : signal_grid_(std::move(signal_grid)),
      idler_grid_(std::move(idler_grid)),
      amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.rows()) != signal_grid_.size() ||
      static_cast<std::size_t>(amplitudes_.cols()) != idler_grid_.size()) {
    throw std::invalid_argument("JSA shape does not match grids");
  }
  if (!amplitudes_.allFinite()) throw std::invalid_argument("JSA must be finite");
  const double n2 = amplitudes_.squaredNorm() * signal_grid_.spacing() * idler_grid_.spacing();
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("JSA is not normalized (norm^2 = " + std::to_string(n2) + ")");
  }
}

JointSpectralAmplitude JointSpectralAmplitude::normalized(FrequencyGrid signal_grid,
                                                          FrequencyGrid idler_grid,
                                                          ComplexMatrix amplitudes) {
  const double n2 = amplitudes.squaredNorm() * signal_grid.spacing() * idler_grid.spacing();
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw Error("cannot normalize a zero or non-finite JSA");
  amplitudes /= std::sqrt(n2);
  return JointSpectralAmplitude(std::move(signal_grid), std::move(idler_grid), std::move(amplitudes));
}

double JointSpectralAmplitude::norm() const {
  return std::sqrt(amplitudes_.squaredNorm() * signal_grid_.spacing() * idler_grid_.spacing());
}

Eigen::VectorXcd to_time_domain(const SpectralAmplitude& state) {
  return frequency_to_time(state.grid(), state.amplitudes());
}

SpectralAmplitude from_time_domain(const FrequencyGrid& grid, const Eigen::VectorXcd& temporal) {
  return SpectralAmplitude(grid, time_to_frequency(grid, temporal));
}

ComplexMatrix joint_amplitude_in(const JointSpectralAmplitude& jsa, Domain signal, Domain idler) {
  ComplexMatrix m = jsa.amplitudes();
  if (signal == Domain::Time) {
    centered_dft_cols(m, Direction::Forward);
    m *= std::sqrt(jsa.signal_grid().spacing() / jsa.signal_grid().time_spacing());
  }
  if (idler == Domain::Time) {
    centered_dft_rows(m, Direction::Forward);
    m *= std::sqrt(jsa.idler_grid().spacing() / jsa.idler_grid().time_spacing());
  }
  return m;
}

ComplexMatrix joint_temporal_amplitude(const JointSpectralAmplitude& jsa) {
  return joint_amplitude_in(jsa, Domain::Time, Domain::Time);
}

double out_of_band_mass(const SpectralAmplitude& state) {
  const Eigen::VectorXd p_freq = state.spectral_intensity() * state.grid().spacing();
  const Eigen::VectorXd p_time = state.temporal_intensity() * state.grid().time_spacing();
  return std::max(out_of_band_mass(std::span<const double>(p_freq.data(), state.grid().size())),
                  out_of_band_mass(std::span<const double>(p_time.data(), state.grid().size())));
}

double out_of_band_mass(const JointSpectralAmplitude& jsa) {
  const auto& gs = jsa.signal_grid();
  const auto& gi = jsa.idler_grid();
  auto marginal_mass = [](const ComplexMatrix& m, double measure) {
    const Eigen::MatrixXd p = m.cwiseAbs2() * measure;
    const Eigen::VectorXd rows = p.rowwise().sum();
    const Eigen::VectorXd cols = p.colwise().sum().transpose();
    return std::max(out_of_band_mass(std::span<const double>(rows.data(), rows.size())),
                    out_of_band_mass(std::span<const double>(cols.data(), cols.size())));
  };
  const double in_freq = marginal_mass(jsa.amplitudes(), gs.spacing() * gi.spacing());
  const double in_time =
      marginal_mass(joint_temporal_amplitude(jsa), gs.time_spacing() * gi.time_spacing());
  return std::max(in_freq, in_time);
}

void require_support(const SpectralAmplitude& state, std::string_view context) {
  const double mass = out_of_band_mass(state);
  if (mass > kSupportGuardMass) throw SupportGuardError(guard_message(context, mass));
}

void require_support(const JointSpectralAmplitude& jsa, std::string_view context) {
  const double mass = out_of_band_mass(jsa);
  if (mass > kSupportGuardMass) throw SupportGuardError(guard_message(context, mass));
}

SpectralAmplitude gaussian_state(const FrequencyGrid& grid, double center, double width, double chirp) {
  if (!(width > 0.0) || !std::isfinite(width) || !std::isfinite(center) || !std::isfinite(chirp)) {
    throw std::invalid_argument("gaussian_state needs finite center/chirp and positive width");
  }
  const double lo = grid.frequency(0);
  const double hi = grid.frequency(grid.size() - 1);
  if (center - 4.0 * width < lo || center + 4.0 * width > hi) {
    throw SupportGuardError("gaussian_state: 4-sigma window [" + std::to_string(center - 4 * width) +
                            ", " + std::to_string(center + 4 * width) +
                            "] leaves the frequency axis");
  }
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double d = grid.frequency(k) - center;
    amps[static_cast<Eigen::Index>(k)] =
        std::exp(-d * d / (4.0 * width * width)) * std::polar(1.0, chirp * d * d);
  }
  return SpectralAmplitude::normalized(grid, std::move(amps));
}

SpectralAmplitude superposition(Complex a, const SpectralAmplitude& psi1, Complex b,
                                const SpectralAmplitude& psi2) {
  require_same_grid(psi1.grid(), psi2.grid(), "superposition");
  Eigen::VectorXcd amps = a * psi1.amplitudes() + b * psi2.amplitudes();
  const double scale = std::abs(a) + std::abs(b);
  if (!(amps.norm() * std::sqrt(psi1.grid().spacing()) > 1e-12 * scale)) {
    throw Error("superposition has zero norm");
  }
  return SpectralAmplitude::normalized(psi1.grid(), std::move(amps));
}

Moments moments(const SpectralAmplitude& state, Guard guard) {
  if (guard == Guard::Enforce) require_support(state, "moments");
  const auto& grid = state.grid();
  const Eigen::VectorXd p_freq = state.spectral_intensity() * grid.spacing();
  const Eigen::VectorXd p_time = state.temporal_intensity() * grid.time_spacing();
  const Eigen::VectorXd omega = grid.frequencies();
  const Eigen::VectorXd t = grid.times();

  Moments m{};
  m.mean_frequency = p_freq.dot(omega) / p_freq.sum();
  m.frequency_width =
      std::sqrt(p_freq.dot((omega.array() - m.mean_frequency).square().matrix()) / p_freq.sum());
  m.mean_time = p_time.dot(t) / p_time.sum();
  m.time_width = std::sqrt(p_time.dot((t.array() - m.mean_time).square().matrix()) / p_time.sum());
  return m;
}

Complex overlap(const SpectralAmplitude& psi, const SpectralAmplitude& phi) {
  require_same_grid(psi.grid(), phi.grid(), "overlap");
  return psi.amplitudes().dot(phi.amplitudes()) * psi.grid().spacing();
}

double fidelity(const SpectralAmplitude& psi, const SpectralAmplitude& phi) {
  return std::min(1.0, std::norm(overlap(psi, phi)));
}

SpectralDensityMatrix to_density(const SpectralAmplitude& state) {
  Eigen::MatrixXcd rho = state.amplitudes() * state.amplitudes().adjoint();
  return SpectralDensityMatrix(state.grid(), std::move(rho));
}

SpectralDensityMatrix mix(std::span<const double> weights, std::span<const SpectralAmplitude> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw std::invalid_argument("mix needs one weight per state and at least one state");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("mix weights must be >= 0");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("mix weights must sum to 1");

  const auto& grid = states.front().grid();
  const auto n = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t k = 0; k < states.size(); ++k) {
    require_same_grid(grid, states[k].grid(), "mix");
    if (weights[k] == 0.0) continue;
    rho.noalias() += weights[k] * (states[k].amplitudes() * states[k].amplitudes().adjoint());
  }
  // Remove rounding asymmetry so the Hermitian check is exact.
  Eigen::MatrixXcd hermitian = 0.5 * (rho + rho.adjoint());
  return SpectralDensityMatrix(grid, std::move(hermitian));
}

double purity(const SpectralDensityMatrix& rho) {
  const double d = rho.grid().spacing();
  // Tr(rho^2) = sum_kl |rho_kl|^2 for Hermitian rho.
  return rho.matrix().squaredNorm() * d * d;
}

JointSpectralAmplitude product_jsa(const SpectralAmplitude& signal, const SpectralAmplitude& idler) {
  ComplexMatrix m = signal.amplitudes() * idler.amplitudes().transpose();
  return JointSpectralAmplitude::normalized(signal.grid(), idler.grid(), std::move(m));
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> jsa_marginals(const JointSpectralAmplitude& jsa) {
  const Eigen::MatrixXd p = jsa.amplitudes().cwiseAbs2();
  Eigen::VectorXd signal = p.rowwise().sum() * jsa.idler_grid().spacing();
  Eigen::VectorXd idler = p.colwise().sum().transpose() * jsa.signal_grid().spacing();
  return {std::move(signal), std::move(idler)};
}

}  // namespace tfcv
