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

#ifndef TFCV_CODES_HPP
#define TFCV_CODES_HPP

#include <cstddef>
#include <cstdint>

#include "tfcv/states.hpp"

namespace tfcv {

enum class CodeKind { Cat, Gkp };

/// Cat: G(omega - a) + (-1)^b G(omega + a) with a = spacing / 2.
/// GKP: sum_n E((2n + b) spacing) G(omega - (2n + b) spacing), where the
/// envelope E(x) = exp(-x^2 / (4 envelope_width^2)) and peaks are kept
/// while |x| <= 4 envelope_width. G is a Gaussian amplitude of intensity
/// width peak_width.
struct CodeSpec {
  CodeKind kind = CodeKind::Gkp;
  double spacing = 2.0;  ///< cat: peak separation; GKP: lattice spacing Delta
  double peak_width = 0.2;
  double envelope_width = 4.0;  ///< GKP only

  /// Throws std::invalid_argument unless widths are positive and
  /// spacing >= 4 peak_width.
  void validate() const;
};

SpectralAmplitude encode(const CodeSpec& spec, int logical, const FrequencyGrid& grid);

/// freq_displace(mu) followed by time_displace(s).
SpectralAmplitude apply_shift_noise(const SpectralAmplitude& psi, double mu, double s,
                                    Guard guard = Guard::Enforce);

struct DecodeResult {
  int bit;
  double confidence;  ///< in [0, 1]; 0 on a decision boundary
};

/// Cat: sign of the parity about the grid centre (confidence |parity|, a
/// zero parity decodes to 0). GKP: circular spectral centroid
/// (Delta/pi) arg sum p(omega) e^{i pi omega / Delta} folded into
/// [0, 2 Delta), nearest of {0, Delta}; on a tie the lower frequency point
/// wins. Confidence is the distance to the nearest boundary over Delta/2.
DecodeResult decode(const CodeSpec& spec, const SpectralAmplitude& psi);

/// Folded GKP centroid in [0, 2 Delta).
double gkp_folded_centroid(const CodeSpec& spec, const SpectralAmplitude& psi);

/// Monte Carlo estimate with Gaussian shifts (mu ~ N(0, sigma_mu),
/// s ~ N(0, sigma_s)). Trial i encodes bit i % 2 and draws from a
/// generator seeded by a hash of (seed, i). Noise wraps cyclically on the
/// grid; the support guard is not applied to noisy states.
double logical_error_rate(const CodeSpec& spec, const FrequencyGrid& grid, double sigma_mu, double sigma_s,
                          std::size_t trials, std::uint64_t seed);

}  // namespace tfcv

#endif  // TFCV_CODES_HPP
