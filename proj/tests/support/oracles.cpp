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


#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace tfcv::testing {

Eigen::VectorXcd direct_time_amplitude(const FrequencyGrid& grid, const Eigen::VectorXcd& spectral) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  const double scale = grid.spacing() / std::sqrt(2.0 * std::numbers::pi);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double t = grid.time(static_cast<std::size_t>(j));
    Complex acc = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      acc += spectral[k] * std::polar(1.0, -grid.frequency(static_cast<std::size_t>(k)) * t);
    }
    out[j] = scale * acc;
  }
  return out;
}

Complex band_limited_value(const FrequencyGrid& grid, const Eigen::VectorXcd& temporal, double omega) {
  const double scale = grid.time_spacing() / std::sqrt(2.0 * std::numbers::pi);
  Complex acc = 0.0;
  for (Eigen::Index j = 0; j < temporal.size(); ++j) {
    acc += temporal[j] * std::polar(1.0, omega * grid.time(static_cast<std::size_t>(j)));
  }
  return scale * acc;
}

double direct_wigner(const SpectralAmplitude& psi, double mu, double tau) {
  const FrequencyGrid& g = psi.grid();
  const Eigen::VectorXcd temporal = direct_time_amplitude(g, psi.amplitudes());
  const double h = 0.5 * g.spacing();
  const auto n = static_cast<long>(g.size());
  const double lo = g.frequency(0);
  const double hi = g.frequency(g.size() - 1);
  Complex acc = 0.0;
  for (long m = -n; m < n; ++m) {
    const double w = static_cast<double>(m) * h;
    if (mu - w < lo || mu - w > hi || mu + w < lo || mu + w > hi) continue;
    acc += std::polar(1.0, 2.0 * w * tau) * band_limited_value(g, temporal, mu - w) *
           std::conj(band_limited_value(g, temporal, mu + w));
  }
  return (acc * h).real() / std::numbers::pi;
}

double gaussian_wigner(double center, double width, double mu, double tau) {
  const double d = mu - center;
  return std::exp(-d * d / (2.0 * width * width) - 2.0 * width * width * tau * tau) / std::numbers::pi;
}

namespace {

Eigen::MatrixXcd weighted(const JointSpectralAmplitude& jsa) {
  const double w = std::sqrt(jsa.signal_grid().spacing() * jsa.idler_grid().spacing());
  return Eigen::MatrixXcd(jsa.amplitudes()) * w;
}

}  // namespace

double jacobi_schmidt_number(const JointSpectralAmplitude& jsa) {
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(weighted(jsa));
  const Eigen::VectorXd p = svd.singularValues().array().square();
  return p.sum() * p.sum() / p.array().square().sum();
}

double reduced_purity_schmidt_number(const JointSpectralAmplitude& jsa) {
  const Eigen::MatrixXcd a = weighted(jsa);
  const Eigen::MatrixXcd rho = a * a.adjoint();
  const double trace = rho.trace().real();
  return trace * trace / (rho * rho).trace().real();
}

ComplexMatrix bilinear_rotation(const JointSpectralAmplitude& jsa) {
  const FrequencyGrid& gs = jsa.signal_grid();
  const FrequencyGrid& gi = jsa.idler_grid();
  const ComplexMatrix& a = jsa.amplitudes();
  const auto ns = static_cast<long>(gs.size());
  const auto ni = static_cast<long>(gi.size());
  const double r2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix out = ComplexMatrix::Zero(a.rows(), a.cols());
  for (long k = 0; k < ns; ++k) {
    for (long l = 0; l < ni; ++l) {
      const double x = gs.frequency(static_cast<std::size_t>(k));
      const double y = gi.frequency(static_cast<std::size_t>(l));
      const double u = (x - y) * r2 / gs.spacing() + 0.5 * static_cast<double>(ns);
      const double v = (x + y) * r2 / gi.spacing() + 0.5 * static_cast<double>(ni);
      const long u0 = static_cast<long>(std::floor(u));
      const long v0 = static_cast<long>(std::floor(v));
      if (u0 < 0 || v0 < 0 || u0 + 1 >= ns || v0 + 1 >= ni) continue;
      const double fu = u - static_cast<double>(u0);
      const double fv = v - static_cast<double>(v0);
      out(k, l) = (1 - fu) * (1 - fv) * a(u0, v0) + fu * (1 - fv) * a(u0 + 1, v0) + (1 - fu) * fv * a(u0, v0 + 1) +
                  fu * fv * a(u0 + 1, v0 + 1);
    }
  }
  return out;
}

double gaussian_jsa_schmidt_number(double ratio) { return 0.5 * (ratio + 1.0 / ratio); }

double gkp_gaussian_tail(double spacing, double sigma) {
  const auto cdf = [sigma](double x) { return 0.5 * std::erfc(-x / (sigma * std::numbers::sqrt2)); };
  double p = 0.0;
  for (int n = -50; n <= 50; ++n) {
    p += cdf((2.0 * n + 1.5) * spacing) - cdf((2.0 * n + 0.5) * spacing);
  }
  return p;
}

SpectralAmplitude random_chirped_gaussian(std::mt19937_64& rng, const FrequencyGrid& grid, double max_center,
                                          double min_width, double max_width, double max_chirp) {
  std::uniform_real_distribution<double> center(-max_center, max_center);
  std::uniform_real_distribution<double> width(min_width, max_width);
  std::uniform_real_distribution<double> chirp(-max_chirp, max_chirp);
  const double c = center(rng);
  const double w = width(rng);
  return gaussian_state(grid, c, w, chirp(rng));
}

SpectralAmplitude random_state(std::mt19937_64& rng, const FrequencyGrid& grid) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const SpectralAmplitude a = random_chirped_gaussian(rng, grid);
  if (unit(rng) < 0.5) return a;
  const SpectralAmplitude b = random_chirped_gaussian(rng, grid);
  const Complex ca = std::polar(0.5 + unit(rng), 2.0 * std::numbers::pi * unit(rng));
  const Complex cb = std::polar(0.5 + unit(rng), 2.0 * std::numbers::pi * unit(rng));
  return superposition(ca, a, cb, b);
}

}  // namespace tfcv::testing
