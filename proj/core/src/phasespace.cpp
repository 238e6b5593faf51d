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

#include "tfcv/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfcv/error.hpp"
#include "tfcv/gates.hpp"

namespace tfcv {
namespace {

constexpr double kPi = std::numbers::pi;

std::size_t mirror(std::size_t k, std::size_t n) { return (n - k) % n; }

std::size_t wrap(long index, long period) { return static_cast<std::size_t>(((index % period) + period) % period); }

bool inside(long index, long size) { return index >= 0 && index < size; }

// Half-step refinement along both axes of a kernel sampled on an N x M grid.
Eigen::MatrixXcd refine(const Eigen::MatrixXcd& m, Domain row_domain, Domain col_domain) {
  Eigen::MatrixXcd tall(2 * m.rows(), m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c) tall.col(c) = interpolate_half_step(m.col(c), row_domain);
  Eigen::MatrixXcd out(tall.rows(), 2 * m.cols());
  for (Eigen::Index r = 0; r < tall.rows(); ++r) {
    out.row(r) = interpolate_half_step(tall.row(r).transpose(), col_domain).transpose();
  }
  return out;
}

Direction conjugate_direction(Domain domain) {
  return domain == Domain::Frequency ? Direction::Inverse : Direction::Forward;
}

// Rows: centre c on the coarse axis; columns: conjugate variable.
// fine(a, b) returns the refined kernel at fine indices in [0, 2N); pairs
// reaching past the band edge contribute nothing, so the state is not
// correlated with its own periodic image.
template <typename Fine>
Eigen::MatrixXd kernel_wigner(std::size_t n, Domain domain, double step, Fine&& fine, double& residual) {
  const long nl = static_cast<long>(n);
  const double h = 0.5 * step;
  const double scale = h / kPi * std::sqrt(static_cast<double>(n));
  Eigen::MatrixXd out(nl, nl);
  std::vector<Complex> folded(n);
  residual = 0.0;
  for (long k = 0; k < nl; ++k) {
    const long centre = 2 * k;
    std::fill(folded.begin(), folded.end(), Complex{});
    for (long o = -nl; o < nl; ++o) {
      if (!inside(centre - o, 2 * nl) || !inside(centre + o, 2 * nl)) continue;
      folded[wrap(o + nl / 2, nl)] += fine(static_cast<std::size_t>(centre - o), static_cast<std::size_t>(centre + o));
    }
    centered_dft(folded, conjugate_direction(domain));
    for (long j = 0; j < nl; ++j) {
      const Complex w = folded[static_cast<std::size_t>(j)] * scale;
      out(k, j) = w.real();
      residual = std::max(residual, std::abs(w.imag()));
    }
  }
  return out;
}

void require_density_support(const SpectralDensityMatrix& rho, std::string_view context) {
  const FrequencyGrid& g = rho.grid();
  Eigen::VectorXd p_freq = rho.matrix().diagonal().real() * g.spacing();
  ComplexMatrix temporal = rho.matrix();
  centered_dft_cols(temporal, Direction::Forward);
  temporal = temporal.adjoint().eval();
  centered_dft_cols(temporal, Direction::Forward);
  Eigen::VectorXd p_time = temporal.diagonal().real() * g.spacing();
  const double mass = std::max(out_of_band_mass(std::span<const double>(p_freq.data(), g.size())),
                               out_of_band_mass(std::span<const double>(p_time.data(), g.size())));
  if (mass > kSupportGuardMass) {
    throw SupportGuardError(std::string(context) + ": " + std::to_string(mass) +
                            " of the probability lies outside the central band");
  }
}

// U rho U^dagger for a single-photon kernel U.
Eigen::MatrixXcd conjugate_by(const SpectralDensityMatrix& rho, const LocalKernel& kernel) {
  Eigen::MatrixXcd m = rho.matrix();
  Eigen::VectorXcd column(m.rows());
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      column = m.col(c);
      kernel(rho.grid(), column);
      m.col(c) = column;
    }
    m = m.adjoint().eval();
  }
  return m;
}

void check_edge_bin(double edge_probability) {
  if (edge_probability > kSupportGuardMass) {
    throw SupportGuardError("parity: unpaired edge bin carries " + std::to_string(edge_probability) +
                            " of the probability");
  }
}

bool is_signal(PhaseVariable v) { return v == PhaseVariable::SignalFrequency || v == PhaseVariable::SignalTime; }
bool is_frequency(PhaseVariable v) {
  return v == PhaseVariable::SignalFrequency || v == PhaseVariable::IdlerFrequency;
}

Eigen::VectorXd axis_of(PhaseVariable v, const JointSpectralAmplitude& jsa) {
  const FrequencyGrid& g = is_signal(v) ? jsa.signal_grid() : jsa.idler_grid();
  return is_frequency(v) ? g.frequencies() : g.times();
}

// Wigner slice of the signal with the idler fixed at the phase-space origin.
Eigen::MatrixXd signal_slice_idler_at_origin(const ComplexMatrix& j, const FrequencyGrid& gs,
                                             const FrequencyGrid& gi, double& residual) {
  const auto ni = static_cast<std::size_t>(j.cols());
  Eigen::MatrixXcd reflected(j.rows(), j.cols());
  for (std::size_t l = 0; l < ni; ++l) {
    reflected.col(static_cast<Eigen::Index>(l)) = j.col(static_cast<Eigen::Index>(mirror(l, ni)));
  }
  const Eigen::MatrixXcd reduced = reflected * j.adjoint() * (gi.spacing() / kPi);
  const Eigen::MatrixXcd fine = refine(reduced, Domain::Frequency, Domain::Frequency);
  return kernel_wigner(
      gs.size(), Domain::Frequency, gs.spacing(),
      [&fine](std::size_t a, std::size_t b) { return fine(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)); },
      residual);
}

}  // namespace

double WignerMap::integral() const {
  const double dmu = mu_axis.size() > 1 ? mu_axis[1] - mu_axis[0] : 0.0;
  const double dtau = tau_axis.size() > 1 ? tau_axis[1] - tau_axis[0] : 0.0;
  return values.sum() * dmu * dtau;
}

double parity_expectation(const SpectralAmplitude& psi) {
  const Eigen::VectorXcd& v = psi.amplitudes();
  const auto n = static_cast<std::size_t>(v.size());
  const double dw = psi.grid().spacing();
  check_edge_bin(std::norm(v[0]) * dw);
  Complex acc{};
  for (std::size_t k = 0; k < n; ++k) {
    acc += std::conj(v[static_cast<Eigen::Index>(k)]) * v[static_cast<Eigen::Index>(mirror(k, n))];
  }
  return acc.real() * dw;
}

double parity_expectation(const SpectralDensityMatrix& rho) {
  const Eigen::MatrixXcd& m = rho.matrix();
  const auto n = static_cast<std::size_t>(m.rows());
  const double dw = rho.grid().spacing();
  check_edge_bin(std::abs(m(0, 0)) * dw);
  Complex acc{};
  for (std::size_t k = 0; k < n; ++k) {
    acc += m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(mirror(k, n)));
  }
  return acc.real() * dw;
}

double displaced_parity(const SpectralAmplitude& psi, double mu, double tau, Guard guard) {
  const SpectralAmplitude moved = time_displace(freq_displace(psi, -mu, guard), -tau, guard);
  return parity_expectation(moved);
}

double displaced_parity(const SpectralDensityMatrix& rho, double mu, double tau, Guard guard) {
  if (guard == Guard::Enforce) require_density_support(rho, "displaced_parity input");
  const LocalKernel shift = [mu, tau](const FrequencyGrid& g, Eigen::VectorXcd& v) {
    kernels::frequency_shift(g, v, -mu);
    kernels::time_shift(g, v, -tau);
  };
  Eigen::MatrixXcd moved = conjugate_by(rho, shift);
  moved = 0.5 * (moved + moved.adjoint()).eval();
  const SpectralDensityMatrix out(rho.grid(), std::move(moved));
  if (guard == Guard::Enforce) require_density_support(out, "displaced_parity output");
  return parity_expectation(out);
}

WignerMap wigner(const SpectralAmplitude& psi, Guard guard) {
  if (guard == Guard::Enforce) require_support(psi, "wigner");
  const FrequencyGrid& g = psi.grid();
  const Eigen::VectorXcd fine = interpolate_half_step(psi.amplitudes(), Domain::Frequency);
  WignerMap map;
  map.mu_axis = g.frequencies();
  map.tau_axis = g.times();
  map.values = kernel_wigner(
      g.size(), Domain::Frequency, g.spacing(),
      [&fine](std::size_t a, std::size_t b) {
        return fine[static_cast<Eigen::Index>(a)] * std::conj(fine[static_cast<Eigen::Index>(b)]);
      },
      map.imaginary_residual);
  return map;
}

WignerMap wigner(const SpectralDensityMatrix& rho, Guard guard) {
  if (guard == Guard::Enforce) require_density_support(rho, "wigner");
  const FrequencyGrid& g = rho.grid();
  const Eigen::MatrixXcd fine = refine(rho.matrix(), Domain::Frequency, Domain::Frequency);
  WignerMap map;
  map.mu_axis = g.frequencies();
  map.tau_axis = g.times();
  map.values = kernel_wigner(
      g.size(), Domain::Frequency, g.spacing(),
      [&fine](std::size_t a, std::size_t b) { return fine(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)); },
      map.imaginary_residual);
  return map;
}

double purity_from_wigner(const WignerMap& map) {
  const double dmu = map.mu_axis[1] - map.mu_axis[0];
  const double dtau = map.tau_axis[1] - map.tau_axis[0];
  return 2.0 * kPi * map.values.squaredNorm() * dmu * dtau;
}

WignerSlice two_photon_wigner_slice(const JointSpectralAmplitude& jsa, FixedVariable a, FixedVariable b,
                                    Guard guard) {
  if (a.variable == b.variable) throw std::invalid_argument("the same phase-space variable is fixed twice");
  if (!std::isfinite(a.value) || !std::isfinite(b.value)) {
    throw std::invalid_argument("fixed phase-space values must be finite");
  }
  if (guard == Guard::Enforce) require_support(jsa, "two_photon_wigner_slice input");

  // Move the fixed point to the origin; the slice is covariant.
  JointSpectralAmplitude moved = jsa;
  for (const FixedVariable& f : {a, b}) {
    const Photon photon = is_signal(f.variable) ? Photon::Signal : Photon::Idler;
    const double value = f.value;
    if (value == 0.0) continue;
    if (is_frequency(f.variable)) {
      moved = apply_local(moved, photon, [value](const FrequencyGrid& g, Eigen::VectorXcd& v) {
        kernels::frequency_shift(g, v, -value);
      }, guard);
    } else {
      moved = apply_local(moved, photon, [value](const FrequencyGrid& g, Eigen::VectorXcd& v) {
        kernels::time_shift(g, v, -value);
      }, guard);
    }
  }

  std::vector<PhaseVariable> free_vars;
  for (PhaseVariable v : {PhaseVariable::SignalFrequency, PhaseVariable::SignalTime, PhaseVariable::IdlerFrequency,
                          PhaseVariable::IdlerTime}) {
    if (v != a.variable && v != b.variable) free_vars.push_back(v);
  }
  WignerSlice slice;
  slice.row_variable = free_vars[0];
  slice.col_variable = free_vars[1];
  slice.row_axis = axis_of(free_vars[0], jsa);
  slice.col_axis = axis_of(free_vars[1], jsa);

  const FrequencyGrid& gs = moved.signal_grid();
  const FrequencyGrid& gi = moved.idler_grid();
  const bool signal_fixed_twice = is_signal(a.variable) && is_signal(b.variable);
  const bool idler_fixed_twice = !is_signal(a.variable) && !is_signal(b.variable);

  if (idler_fixed_twice) {
    slice.values = signal_slice_idler_at_origin(moved.amplitudes(), gs, gi, slice.imaginary_residual);
    return slice;
  }
  if (signal_fixed_twice) {
    const ComplexMatrix swapped = moved.amplitudes().transpose();
    slice.values = signal_slice_idler_at_origin(swapped, gi, gs, slice.imaginary_residual);
    return slice;
  }

  // One variable fixed per photon: work in the representation of the fixed
  // variable and transform along both offsets.
  const PhaseVariable fixed_s = is_signal(a.variable) ? a.variable : b.variable;
  const PhaseVariable fixed_i = is_signal(a.variable) ? b.variable : a.variable;
  const Domain ds = is_frequency(fixed_s) ? Domain::Frequency : Domain::Time;
  const Domain di = is_frequency(fixed_i) ? Domain::Frequency : Domain::Time;
  const Eigen::MatrixXcd fine = refine(joint_amplitude_in(moved, ds, di), ds, di);

  const long ns = static_cast<long>(gs.size());
  const long ni = static_cast<long>(gi.size());
  ComplexMatrix folded = ComplexMatrix::Zero(ns, ni);
  for (long x = -ns + 1; x < ns; ++x) {
    const auto minus_x = static_cast<Eigen::Index>(ns - x);
    const auto plus_x = static_cast<Eigen::Index>(ns + x);
    const auto row = static_cast<Eigen::Index>(wrap(x + ns / 2, ns));
    for (long y = -ni + 1; y < ni; ++y) {
      const auto minus_y = static_cast<Eigen::Index>(ni - y);
      const auto plus_y = static_cast<Eigen::Index>(ni + y);
      folded(row, static_cast<Eigen::Index>(wrap(y + ni / 2, ni))) +=
          fine(minus_x, minus_y) * std::conj(fine(plus_x, plus_y));
    }
  }
  centered_dft_cols(folded, conjugate_direction(ds));
  centered_dft_rows(folded, conjugate_direction(di));
  const double step_s = ds == Domain::Frequency ? gs.spacing() : gs.time_spacing();
  const double step_i = di == Domain::Frequency ? gi.spacing() : gi.time_spacing();
  const double scale = (0.5 * step_s / kPi) * std::sqrt(static_cast<double>(ns)) * (0.5 * step_i / kPi) *
                       std::sqrt(static_cast<double>(ni));
  slice.values = (folded.real() * scale).eval();
  slice.imaginary_residual = (folded.imag() * scale).cwiseAbs().maxCoeff();
  return slice;
}

TwoPhotonMarginals two_photon_marginals(const JointSpectralAmplitude& jsa) {
  TwoPhotonMarginals m;
  m.jsi = jsa.amplitudes().cwiseAbs2();
  m.jti = joint_amplitude_in(jsa, Domain::Time, Domain::Time).cwiseAbs2();
  m.jtsi_ts_wi = joint_amplitude_in(jsa, Domain::Time, Domain::Frequency).cwiseAbs2();
  m.jtsi_ti_ws = joint_amplitude_in(jsa, Domain::Frequency, Domain::Time).cwiseAbs2();
  return m;
}

Eigen::VectorXd hom_coincidence(const JointSpectralAmplitude& jsa, std::span<const double> delays) {
  if (!(jsa.signal_grid() == jsa.idler_grid())) {
    throw GridMismatchError("hom_coincidence needs identical signal and idler grids");
  }
  const FrequencyGrid& g = jsa.signal_grid();
  const ComplexMatrix& j = jsa.amplitudes();
  const Eigen::MatrixXcd swap_product = j.cwiseProduct(j.transpose().conjugate());
  const Eigen::VectorXd w = g.frequencies();
  const double measure = g.spacing() * g.spacing();

  Eigen::VectorXd out(static_cast<Eigen::Index>(delays.size()));
  Eigen::VectorXcd phase(w.size());
  for (std::size_t d = 0; d < delays.size(); ++d) {
    for (Eigen::Index k = 0; k < w.size(); ++k) phase[k] = std::polar(1.0, w[k] * delays[d]);
    const Complex overlap = phase.transpose() * swap_product * phase.conjugate();
    out[static_cast<Eigen::Index>(d)] = std::clamp(0.5 * (1.0 - overlap.real() * measure), 0.0, 1.0);
  }
  return out;
}

Eigen::VectorXd default_hom_delays(const JointSpectralAmplitude& jsa) {
  const Eigen::MatrixXd p = joint_amplitude_in(jsa, Domain::Time, Domain::Time).cwiseAbs2();
  const Eigen::VectorXd ts = jsa.signal_grid().times();
  const Eigen::VectorXd ti = jsa.idler_grid().times();
  double total = 0.0;
  double first = 0.0;
  double second = 0.0;
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    for (Eigen::Index c = 0; c < p.cols(); ++c) {
      const double d = ts[r] - ti[c];
      total += p(r, c);
      first += p(r, c) * d;
      second += p(r, c) * d * d;
    }
  }
  const double mean = first / total;
  double width = std::sqrt(std::max(0.0, second / total - mean * mean));
  if (!(width > 0.0)) width = jsa.signal_grid().time_spacing();
  const double reach = kDefaultHomReach * width;
  return Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(kDefaultHomDelays), -reach, reach);
}

bool hom_entanglement_witness(const JointSpectralAmplitude& jsa, std::optional<std::span<const double>> delays) {
  Eigen::VectorXd values;
  if (delays) {
    values = hom_coincidence(jsa, *delays);
  } else {
    const Eigen::VectorXd scan = default_hom_delays(jsa);
    values = hom_coincidence(jsa, std::span<const double>(scan.data(), static_cast<std::size_t>(scan.size())));
  }
  return values.size() > 0 && values.maxCoeff() > 0.5 + 1e-6;
}

}  // namespace tfcv
