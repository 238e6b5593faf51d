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

#include "tfcv/codes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "tfcv/error.hpp"
#include "tfcv/gates.hpp"

namespace tfcv {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Eigen::VectorXcd peak(const FrequencyGrid& grid, double center, double width) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double d = grid.frequency(k) - center;
    v[static_cast<Eigen::Index>(k)] = std::exp(-d * d / (4.0 * width * width));
  }
  return v;
}

// <psi|Pi|psi> without the edge-bin check, so decoding never throws.
double raw_parity(const SpectralAmplitude& psi) {
  const Eigen::VectorXcd& v = psi.amplitudes();
  const Eigen::Index n = v.size();
  Complex acc{};
  for (Eigen::Index k = 0; k < n; ++k) acc += std::conj(v[k]) * v[(n - k) % n];
  return acc.real() * psi.grid().spacing();
}

void require_inside(const FrequencyGrid& grid, double lo, double hi) {
  if (lo < grid.frequency(0) || hi > grid.frequency(grid.size() - 1)) {
    throw SupportGuardError("code support [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] leaves the frequency axis");
  }
}

}  // namespace

void CodeSpec::validate() const {
  if (!(peak_width > 0.0) || !std::isfinite(peak_width)) throw std::invalid_argument("peak_width must be positive");
  if (!std::isfinite(spacing) || !(spacing >= 4.0 * peak_width)) {
    throw std::invalid_argument("code peaks are not resolvable: spacing must be >= 4 peak_width");
  }
  if (kind == CodeKind::Gkp && (!(envelope_width > 0.0) || !std::isfinite(envelope_width))) {
    throw std::invalid_argument("GKP envelope_width must be positive");
  }
}

SpectralAmplitude encode(const CodeSpec& spec, int logical, const FrequencyGrid& grid) {
  spec.validate();
  if (logical != 0 && logical != 1) throw std::invalid_argument("logical value must be 0 or 1");
  Eigen::VectorXcd v;
  if (spec.kind == CodeKind::Cat) {
    const double a = 0.5 * spec.spacing;
    require_inside(grid, -a - 4.0 * spec.peak_width, a + 4.0 * spec.peak_width);
    v = peak(grid, a, spec.peak_width) + (logical == 0 ? 1.0 : -1.0) * peak(grid, -a, spec.peak_width);
  } else {
    const double reach = 4.0 * spec.envelope_width;
    v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(grid.size()));
    const long n_max = static_cast<long>(std::floor(reach / (2.0 * spec.spacing))) + 1;
    double lo = 0.0;
    double hi = 0.0;
    for (long n = -n_max; n <= n_max; ++n) {
      const double x = static_cast<double>(2 * n + logical) * spec.spacing;
      if (std::abs(x) > reach) continue;
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      const double envelope = std::exp(-x * x / (4.0 * spec.envelope_width * spec.envelope_width));
      v += envelope * peak(grid, x, spec.peak_width);
    }
    require_inside(grid, lo - 4.0 * spec.peak_width, hi + 4.0 * spec.peak_width);
  }
  SpectralAmplitude psi = SpectralAmplitude::normalized(grid, std::move(v));
  require_support(psi, "encode");
  return psi;
}

SpectralAmplitude apply_shift_noise(const SpectralAmplitude& psi, double mu, double s, Guard guard) {
  return time_displace(freq_displace(psi, mu, guard), s, guard);
}

double gkp_folded_centroid(const CodeSpec& spec, const SpectralAmplitude& psi) {
  const double delta = spec.spacing;
  const Eigen::VectorXd p = psi.spectral_intensity();
  Complex acc{};
  for (std::size_t k = 0; k < psi.grid().size(); ++k) {
    acc += p[static_cast<Eigen::Index>(k)] * std::polar(1.0, std::numbers::pi * psi.grid().frequency(k) / delta);
  }
  double x = delta / std::numbers::pi * std::arg(acc);
  if (x < 0.0) x += 2.0 * delta;
  if (x >= 2.0 * delta) x -= 2.0 * delta;
  return x;
}

DecodeResult decode(const CodeSpec& spec, const SpectralAmplitude& psi) {
  if (spec.kind == CodeKind::Cat) {
    const double parity = raw_parity(psi);
    return {parity < 0.0 ? 1 : 0, std::min(1.0, std::abs(parity))};
  }
  const double delta = spec.spacing;
  const double x = gkp_folded_centroid(spec, psi);
  const double d0 = std::min(x, 2.0 * delta - x);
  const double d1 = std::abs(x - delta);
  int bit;
  if (d1 < d0) {
    bit = 1;
  } else if (d0 < d1) {
    bit = 0;
  } else {
    bit = x < delta ? 0 : 1;  // x = Delta/2 sits between 0 and Delta, x = 3 Delta/2 between Delta and 2 Delta
  }
  const double confidence = std::clamp(1.0 - 2.0 * std::min(d0, d1) / delta, 0.0, 1.0);
  return {bit, confidence};
}

double logical_error_rate(const CodeSpec& spec, const FrequencyGrid& grid, double sigma_mu, double sigma_s,
                          std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(sigma_mu >= 0.0) || !(sigma_s >= 0.0) || !std::isfinite(sigma_mu) || !std::isfinite(sigma_s)) {
    throw std::invalid_argument("noise sigmas must be finite and non-negative");
  }
  const SpectralAmplitude codewords[2] = {encode(spec, 0, grid), encode(spec, 1, grid)};
  std::size_t errors = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i))));
    std::normal_distribution<double> normal(0.0, 1.0);
    const double mu = sigma_mu * normal(rng);
    const double s = sigma_s * normal(rng);
    const int bit = static_cast<int>(i % 2);
    const SpectralAmplitude noisy = apply_shift_noise(codewords[bit], mu, s, Guard::Skip);
    if (decode(spec, noisy).bit != bit) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(trials);
}

}  // namespace tfcv
