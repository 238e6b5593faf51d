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

#include "tfcv/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

#include "tfcv/gates.hpp"

namespace tfcv {

SchmidtDecomposition schmidt_decompose(const JointSpectralAmplitude& jsa, std::optional<std::size_t> max_rank,
                                       double relative_cutoff) {
  if (!(relative_cutoff >= 0.0)) throw std::invalid_argument("relative_cutoff must be non-negative");
  const double ds = jsa.signal_grid().spacing();
  const double di = jsa.idler_grid().spacing();
  const Eigen::MatrixXcd scaled = jsa.amplitudes() * std::sqrt(ds * di);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(scaled, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();

  Eigen::Index keep = 0;
  const double floor = sigma.size() > 0 ? relative_cutoff * sigma[0] : 0.0;
  while (keep < sigma.size() && sigma[keep] > floor) ++keep;
  if (max_rank) keep = std::min<Eigen::Index>(keep, static_cast<Eigen::Index>(*max_rank));

  SchmidtDecomposition out;
  out.coefficients = sigma.head(keep);
  out.signal_modes.reserve(static_cast<std::size_t>(keep));
  out.idler_modes.reserve(static_cast<std::size_t>(keep));
  for (Eigen::Index n = 0; n < keep; ++n) {
    out.signal_modes.push_back(SpectralAmplitude::normalized(jsa.signal_grid(), svd.matrixU().col(n) / std::sqrt(ds)));
    out.idler_modes.push_back(
        SpectralAmplitude::normalized(jsa.idler_grid(), svd.matrixV().col(n).conjugate() / std::sqrt(di)));
  }
  return out;
}

double schmidt_number(std::span<const double> coefficients) {
  double total = 0.0;
  double sum_sq = 0.0;
  for (double c : coefficients) total += c * c;
  if (!(total > 0.0)) throw std::invalid_argument("Schmidt coefficients are all zero");
  for (double c : coefficients) {
    const double lambda = c * c / total;
    sum_sq += lambda * lambda;
  }
  return 1.0 / sum_sq;
}

double schmidt_number(const SchmidtDecomposition& decomposition) {
  const auto& c = decomposition.coefficients;
  return schmidt_number(std::span<const double>(c.data(), static_cast<std::size_t>(c.size())));
}

bool entangled_flag(const SchmidtDecomposition& decomposition, std::size_t n) {
  if (n < 1) throw std::invalid_argument("entangled_flag needs N >= 1");
  const auto& c = decomposition.coefficients;
  const std::size_t m = std::min<std::size_t>(n, static_cast<std::size_t>(c.size()));
  return schmidt_number(std::span<const double>(c.data(), m)) > 1.0 + 1e-6;
}

ComplexMatrix reconstruct(const SchmidtDecomposition& decomposition) {
  if (decomposition.rank() == 0) throw std::invalid_argument("empty decomposition");
  const auto& gs = decomposition.signal_modes.front().grid();
  const auto& gi = decomposition.idler_modes.front().grid();
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(gs.size()), static_cast<Eigen::Index>(gi.size()));
  for (std::size_t n = 0; n < decomposition.rank(); ++n) {
    m.noalias() += decomposition.coefficients[static_cast<Eigen::Index>(n)] *
                   decomposition.signal_modes[n].amplitudes() *
                   decomposition.idler_modes[n].amplitudes().transpose();
  }
  return m;
}

SeparationResult bloch_messiah_separate(const JointSpectralAmplitude& jsa, Guard guard) {
  const double before = schmidt_number(schmidt_decompose(jsa));
  JointSpectralAmplitude rotated = freq_beam_splitter(jsa, guard);
  const double after = schmidt_number(schmidt_decompose(rotated));
  return {std::move(rotated), before, after};
}

}  // namespace tfcv
