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

#include "tfcv/gates.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

#include "tfcv/error.hpp"

namespace tfcv {
namespace kernels {
namespace {

constexpr Complex kI{0.0, 1.0};

std::span<Complex> as_span(Eigen::VectorXcd& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

void check_length(const FrequencyGrid& grid, const Eigen::VectorXcd& v) {
  if (static_cast<std::size_t>(v.size()) != grid.size()) {
    throw std::invalid_argument("sample vector length does not match grid");
  }
}

void frequency_chirp(const FrequencyGrid& grid, Eigen::VectorXcd& v, double a) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double w = grid.frequency(static_cast<std::size_t>(k));
    v[k] *= std::polar(1.0, 0.5 * a * w * w);
  }
}

}  // namespace

void time_shift(const FrequencyGrid& grid, Eigen::VectorXcd& v, double s) {
  check_length(grid, v);
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    v[k] *= std::polar(1.0, grid.frequency(static_cast<std::size_t>(k)) * s);
  }
}

void frequency_shift(const FrequencyGrid& grid, Eigen::VectorXcd& v, double mu) {
  temporal_phase(grid, v, [mu](double t) { return -mu * t; });
}

void frequency_shift_bins(Eigen::VectorXcd& v, long bins) {
  const long n = static_cast<long>(v.size());
  const long m = ((bins % n) + n) % n;
  if (m == 0) return;
  Eigen::VectorXcd out(v.size());
  for (long k = 0; k < n; ++k) out[(k + m) % n] = v[k];
  v = std::move(out);
}

void diagonal_phase(const FrequencyGrid& grid, Eigen::VectorXcd& v, const std::function<double(double)>& f) {
  check_length(grid, v);
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double phase = f(grid.frequency(static_cast<std::size_t>(k)));
    if (!std::isfinite(phase)) throw std::invalid_argument("phase function is not finite on the grid");
    v[k] *= std::polar(1.0, phase);
  }
}

void temporal_phase(const FrequencyGrid& grid, Eigen::VectorXcd& v, const std::function<double(double)>& g) {
  check_length(grid, v);
  centered_dft(as_span(v), Direction::Forward);
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    const double phase = g(grid.time(static_cast<std::size_t>(j)));
    if (!std::isfinite(phase)) throw std::invalid_argument("phase function is not finite on the grid");
    v[j] *= std::polar(1.0, phase);
  }
  centered_dft(as_span(v), Direction::Inverse);
}

void fractional_fourier(const FrequencyGrid& grid, Eigen::VectorXcd& v, double theta) {
  check_length(grid, v);
  if (!std::isfinite(theta)) throw std::invalid_argument("fractional Fourier angle must be finite");
  constexpr double pi = std::numbers::pi;

  // exp(2 pi i H) = -1 and exp(+-i pi H) = +-i * parity.
  const double turns = std::round(theta / (2.0 * pi));
  double rest = theta - 2.0 * pi * turns;
  Complex prefactor = std::fmod(std::abs(turns), 2.0) == 1.0 ? -1.0 : 1.0;
  bool flip = false;
  if (rest > 0.5 * pi) {
    rest -= pi;
    prefactor *= kI;
    flip = true;
  } else if (rest < -0.5 * pi) {
    rest += pi;
    prefactor *= -kI;
    flip = true;
  }

  if (rest != 0.0) {
    const double a = std::tan(0.5 * rest);
    const double b = std::sin(rest);
    frequency_chirp(grid, v, a);
    temporal_phase(grid, v, [b](double t) { return 0.5 * b * t * t; });
    frequency_chirp(grid, v, a);
  }
  if (flip) parity(v);
  v *= prefactor;
}

void parity(Eigen::VectorXcd& v) { v = reflect(v); }

}  // namespace kernels

namespace {

SpectralAmplitude apply(const SpectralAmplitude& psi, Guard guard, std::string_view name,
                        const std::function<void(const FrequencyGrid&, Eigen::VectorXcd&)>& kernel) {
  if (guard == Guard::Enforce) require_support(psi, std::string(name) + " input");
  Eigen::VectorXcd v = psi.amplitudes();
  kernel(psi.grid(), v);
  SpectralAmplitude out = SpectralAmplitude::normalized(psi.grid(), std::move(v));
  if (guard == Guard::Enforce) require_support(out, std::string(name) + " output");
  return out;
}

void require_same_grids(const JointSpectralAmplitude& jsa, std::string_view name) {
  if (!(jsa.signal_grid() == jsa.idler_grid())) {
    throw GridMismatchError(std::string(name) + " needs identical signal and idler grids");
  }
}

}  // namespace

SpectralAmplitude time_displace(const SpectralAmplitude& psi, double s, Guard guard) {
  return apply(psi, guard, "time_displace",
               [s](const FrequencyGrid& g, Eigen::VectorXcd& v) { kernels::time_shift(g, v, s); });
}

SpectralAmplitude freq_displace(const SpectralAmplitude& psi, double mu, Guard guard) {
  return apply(psi, guard, "freq_displace",
               [mu](const FrequencyGrid& g, Eigen::VectorXcd& v) { kernels::frequency_shift(g, v, mu); });
}

SpectralAmplitude freq_displace_by_bins(const SpectralAmplitude& psi, double mu, Guard guard) {
  const double bins = mu / psi.grid().spacing();
  const double rounded = std::round(bins);
  if (!std::isfinite(bins) || std::abs(bins - rounded) > 1e-9) {
    throw std::invalid_argument("freq_displace_by_bins: shift is not a whole number of bins");
  }
  return apply(psi, guard, "freq_displace_by_bins", [rounded](const FrequencyGrid&, Eigen::VectorXcd& v) {
    kernels::frequency_shift_bins(v, static_cast<long>(rounded));
  });
}

SpectralAmplitude frac_fourier(const SpectralAmplitude& psi, double theta, Guard guard) {
  return apply(psi, guard, "frac_fourier", [theta](const FrequencyGrid& g, Eigen::VectorXcd& v) {
    kernels::fractional_fourier(g, v, theta);
  });
}

SpectralAmplitude fourier(const SpectralAmplitude& psi, Guard guard) {
  return frac_fourier(psi, 0.5 * std::numbers::pi, guard);
}

SpectralAmplitude inverse_fourier(const SpectralAmplitude& psi, Guard guard) {
  return frac_fourier(psi, -0.5 * std::numbers::pi, guard);
}

SpectralAmplitude parity(const SpectralAmplitude& psi) {
  return SpectralAmplitude(psi.grid(), reflect(psi.amplitudes()));
}

SpectralAmplitude quad_phase(const SpectralAmplitude& psi, double s) {
  return diag_phase(psi, [s](double w) { return s * w * w; });
}

SpectralAmplitude cubic_phase(const SpectralAmplitude& psi, double gamma) {
  return diag_phase(psi, [gamma](double w) { return gamma * w * w * w; });
}

SpectralAmplitude diag_phase(const SpectralAmplitude& psi, const std::function<double(double)>& f) {
  return apply(psi, Guard::Skip, "diag_phase",
               [&f](const FrequencyGrid& g, Eigen::VectorXcd& v) { kernels::diagonal_phase(g, v, f); });
}

JointSpectralAmplitude apply_local(const JointSpectralAmplitude& jsa, Photon photon, const LocalKernel& kernel,
                                   Guard guard) {
  if (guard == Guard::Enforce) require_support(jsa, "local gate input");
  ComplexMatrix m = jsa.amplitudes();
  if (photon == Photon::Signal) {
    Eigen::VectorXcd column(m.rows());
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      column = m.col(c);
      kernel(jsa.signal_grid(), column);
      m.col(c) = column;
    }
  } else {
    Eigen::VectorXcd row(m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      row = m.row(r).transpose();
      kernel(jsa.idler_grid(), row);
      m.row(r) = row.transpose();
    }
  }
  JointSpectralAmplitude out =
      JointSpectralAmplitude::normalized(jsa.signal_grid(), jsa.idler_grid(), std::move(m));
  if (guard == Guard::Enforce) require_support(out, "local gate output");
  return out;
}

JointSpectralAmplitude cond_freq_time(const JointSpectralAmplitude& jsa, Photon target, Guard guard) {
  if (guard == Guard::Enforce) require_support(jsa, "cond_freq_time input");
  ComplexMatrix m = jsa.amplitudes();
  const FrequencyGrid& gs = jsa.signal_grid();
  const FrequencyGrid& gi = jsa.idler_grid();
  if (target == Photon::Idler) {
    centered_dft_rows(m, Direction::Forward);
    for (Eigen::Index k = 0; k < m.rows(); ++k) {
      const double ws = gs.frequency(static_cast<std::size_t>(k));
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        m(k, j) *= std::polar(1.0, ws * gi.time(static_cast<std::size_t>(j)));
      }
    }
    centered_dft_rows(m, Direction::Inverse);
  } else {
    centered_dft_cols(m, Direction::Forward);
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
      const double ts = gs.time(static_cast<std::size_t>(j));
      for (Eigen::Index l = 0; l < m.cols(); ++l) {
        m(j, l) *= std::polar(1.0, gi.frequency(static_cast<std::size_t>(l)) * ts);
      }
    }
    centered_dft_cols(m, Direction::Inverse);
  }
  JointSpectralAmplitude out = JointSpectralAmplitude::normalized(gs, gi, std::move(m));
  if (guard == Guard::Enforce) require_support(out, "cond_freq_time output");
  return out;
}

JointSpectralAmplitude cond_freq_freq(const JointSpectralAmplitude& jsa) {
  ComplexMatrix m = jsa.amplitudes();
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    const double ws = jsa.signal_grid().frequency(static_cast<std::size_t>(k));
    for (Eigen::Index l = 0; l < m.cols(); ++l) {
      m(k, l) *= std::polar(1.0, ws * jsa.idler_grid().frequency(static_cast<std::size_t>(l)));
    }
  }
  return JointSpectralAmplitude::normalized(jsa.signal_grid(), jsa.idler_grid(), std::move(m));
}

double out_of_disc_mass(const JointSpectralAmplitude& jsa) {
  require_same_grids(jsa, "out_of_disc_mass");
  const FrequencyGrid& g = jsa.signal_grid();
  auto outside = [&](const ComplexMatrix& m, const Eigen::VectorXd& axis, double span) {
    const double radius = kCentralBandFraction * 0.5 * span / std::numbers::sqrt2;
    double total = 0.0;
    double out = 0.0;
    for (Eigen::Index a = 0; a < m.rows(); ++a) {
      for (Eigen::Index b = 0; b < m.cols(); ++b) {
        const double p = std::norm(m(a, b));
        total += p;
        if (axis[a] * axis[a] + axis[b] * axis[b] > radius * radius) out += p;
      }
    }
    return total > 0.0 ? out / total : 0.0;
  };
  const double in_frequency = outside(jsa.amplitudes(), g.frequencies(), g.span());
  const double in_time = outside(joint_amplitude_in(jsa, Domain::Time, Domain::Time), g.times(), g.time_span());
  return std::max(in_frequency, in_time);
}

JointSpectralAmplitude freq_beam_splitter(const JointSpectralAmplitude& jsa, Guard guard) {
  require_same_grids(jsa, "freq_beam_splitter");
  if (guard == Guard::Enforce) {
    const double mass = out_of_disc_mass(jsa);
    if (mass > kSupportGuardMass) {
      throw SupportGuardError("freq_beam_splitter input: " + std::to_string(mass) +
                              " of the probability lies outside the rotation-safe disc");
    }
  }
  const FrequencyGrid& g = jsa.signal_grid();
  const auto n = static_cast<Eigen::Index>(g.size());
  const double phi = 0.25 * std::numbers::pi;
  const double shear_x = std::tan(0.5 * phi);
  const double shear_y = std::sin(phi);
  const Eigen::VectorXd w = g.frequencies();
  const Eigen::VectorXd t = g.times();

  ComplexMatrix m = jsa.amplitudes();
  // omega_s -> omega_s + shear_x * omega_i, a ramp in (t_s, omega_i).
  auto shear_signal = [&]() {
    centered_dft_cols(m, Direction::Forward);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index l = 0; l < n; ++l) m(j, l) *= std::polar(1.0, -shear_x * w[l] * t[j]);
    }
    centered_dft_cols(m, Direction::Inverse);
  };
  shear_signal();
  // omega_i -> omega_i - shear_y * omega_s, a ramp in (omega_s, t_i).
  centered_dft_rows(m, Direction::Forward);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) m(k, j) *= std::polar(1.0, shear_y * w[k] * t[j]);
  }
  centered_dft_rows(m, Direction::Inverse);
  shear_signal();

  JointSpectralAmplitude out = JointSpectralAmplitude::normalized(g, g, std::move(m));
  if (guard == Guard::Enforce) require_support(out, "freq_beam_splitter output");
  return out;
}

double global_phase(const SpectralAmplitude& a, const SpectralAmplitude& b) {
  return std::arg(a.amplitudes().dot(b.amplitudes()));
}

double max_distance_up_to_phase(const SpectralAmplitude& a, const SpectralAmplitude& b) {
  const Complex rotation = std::polar(1.0, global_phase(a, b));
  return (a.amplitudes() * rotation - b.amplitudes()).cwiseAbs().maxCoeff();
}

}  // namespace tfcv
