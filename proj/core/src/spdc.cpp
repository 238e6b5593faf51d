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

#include "tfcv/spdc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "tfcv/error.hpp"

namespace tfcv {
namespace {

bool inside_axis(const FrequencyGrid& grid, double value) {
  return value >= grid.frequency(0) && value <= grid.frequency(grid.size() - 1);
}

}  // namespace

JointSpectralAmplitude gaussian_jsa(const GaussianJsaSpec& spec, const FrequencyGrid& signal_grid,
                                    const FrequencyGrid& idler_grid) {
  if (!(spec.delta_plus > 0.0) || !(spec.delta_minus > 0.0) || !std::isfinite(spec.delta_plus) ||
      !std::isfinite(spec.delta_minus)) {
    throw std::invalid_argument("gaussian_jsa widths must be positive and finite");
  }
  // Extent of the 4-sigma ellipse projected on each frequency axis.
  const double reach = 4.0 * std::sqrt(0.5 * (spec.delta_plus * spec.delta_plus +
                                              spec.delta_minus * spec.delta_minus));
  if (!inside_axis(signal_grid, spec.center_s - reach) || !inside_axis(signal_grid, spec.center_s + reach) ||
      !inside_axis(idler_grid, spec.center_i - reach) || !inside_axis(idler_grid, spec.center_i + reach)) {
    throw SupportGuardError("gaussian_jsa: 4-sigma support (+-" + std::to_string(reach) +
                            ") leaves the grid");
  }

  const auto ns = static_cast<Eigen::Index>(signal_grid.size());
  const auto ni = static_cast<Eigen::Index>(idler_grid.size());
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  ComplexMatrix m(ns, ni);
  for (Eigen::Index k = 0; k < ns; ++k) {
    const double ws = signal_grid.frequency(static_cast<std::size_t>(k)) - spec.center_s;
    for (Eigen::Index l = 0; l < ni; ++l) {
      const double wi = idler_grid.frequency(static_cast<std::size_t>(l)) - spec.center_i;
      const double plus = (ws + wi) * inv_sqrt2;
      const double minus = (ws - wi) * inv_sqrt2;
      m(k, l) = std::exp(-plus * plus / (4.0 * spec.delta_plus * spec.delta_plus) -
                         minus * minus / (4.0 * spec.delta_minus * spec.delta_minus));
    }
  }
  return JointSpectralAmplitude::normalized(signal_grid, idler_grid, std::move(m));
}

JointSpectralAmplitude jsa_from_pump_phasematching(const SpectralFunction& pump,
                                                   const SpectralFunction& phasematching,
                                                   const FrequencyGrid& signal_grid,
                                                   const FrequencyGrid& idler_grid) {
  const auto ns = static_cast<Eigen::Index>(signal_grid.size());
  const auto ni = static_cast<Eigen::Index>(idler_grid.size());
  ComplexMatrix m(ns, ni);
  for (Eigen::Index k = 0; k < ns; ++k) {
    const double ws = signal_grid.frequency(static_cast<std::size_t>(k));
    for (Eigen::Index l = 0; l < ni; ++l) {
      const double wi = idler_grid.frequency(static_cast<std::size_t>(l));
      m(k, l) = pump(ws + wi) * phasematching(ws - wi);
    }
  }
  if (!m.allFinite()) throw std::invalid_argument("pump or phase-matching returned non-finite values");
  if (m.squaredNorm() == 0.0) throw Error("pump times phase-matching vanishes on the grid");
  return JointSpectralAmplitude::normalized(signal_grid, idler_grid, std::move(m));
}

JsiPrincipalAxes jsi_principal_axes(const JointSpectralAmplitude& jsa) {
  const Eigen::MatrixXd p = jsa.amplitudes().cwiseAbs2();
  const double total = p.sum();
  const Eigen::VectorXd ws = jsa.signal_grid().frequencies();
  const Eigen::VectorXd wi = jsa.idler_grid().frequencies();

  const Eigen::VectorXd ps = p.rowwise().sum();
  const Eigen::VectorXd pi = p.colwise().sum().transpose();
  const double ms = ps.dot(ws) / total;
  const double mi = pi.dot(wi) / total;
  const Eigen::VectorXd ds = ws.array() - ms;
  const Eigen::VectorXd di = wi.array() - mi;
  const double vss = ps.dot(ds.cwiseAbs2()) / total;
  const double vii = pi.dot(di.cwiseAbs2()) / total;
  const double vsi = ds.dot(p * di) / total;

  Eigen::Matrix2d cov;
  cov << vss, vsi, vsi, vii;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(cov);
  const Eigen::Vector2d values = solver.eigenvalues();  // ascending
  const Eigen::Vector2d major = solver.eigenvectors().col(1);

  JsiPrincipalAxes axes{};
  axes.major_width = std::sqrt(std::max(0.0, values[1]));
  axes.minor_width = std::sqrt(std::max(0.0, values[0]));
  double angle = std::atan2(major[1], major[0]);
  if (angle <= -std::numbers::pi / 2) angle += std::numbers::pi;
  if (angle > std::numbers::pi / 2) angle -= std::numbers::pi;
  axes.major_angle = angle;
  axes.correlation = vsi / std::sqrt(vss * vii);
  return axes;
}

}  // namespace tfcv
