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


#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tfcv/error.hpp"
#include "tfcv/gates.hpp"
#include "tfcv/states.hpp"

namespace tfcv {
namespace {

const FrequencyGrid kGrid = FrequencyGrid::balanced(256);

TEST(SpectralAmplitude, NormalizationContract) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(256);
  v[128] = 2.0;
  EXPECT_THROW(SpectralAmplitude(kGrid, v), std::invalid_argument);
  const SpectralAmplitude s = SpectralAmplitude::normalized(kGrid, v);
  EXPECT_NEAR(s.norm(), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(s[128]), 1.0 / std::sqrt(kGrid.spacing()), 1e-12);
  EXPECT_THROW(SpectralAmplitude::normalized(kGrid, Eigen::VectorXcd::Zero(256)), Error);
  EXPECT_THROW(SpectralAmplitude::normalized(kGrid, Eigen::VectorXcd::Ones(128)), std::invalid_argument);
}

TEST(GaussianState, MomentsMatchClosedForm) {
  for (double chirp : {0.0, 0.15, -0.3}) {
    const double w = 0.9;
    const Moments m = moments(gaussian_state(kGrid, 1.2, w, chirp));
    EXPECT_NEAR(m.mean_frequency, 1.2, 1e-12);
    EXPECT_NEAR(m.frequency_width, w, 1e-12);
    EXPECT_NEAR(m.mean_time, 0.0, 1e-12);
    EXPECT_NEAR(m.time_width, std::sqrt(1.0 / (4.0 * w * w) + 4.0 * chirp * chirp * w * w), 1e-10);
  }
}

TEST(GaussianState, GuardRejectsEdgeStates) {
  EXPECT_THROW(gaussian_state(kGrid, 18.0, 1.0), SupportGuardError);
  EXPECT_THROW(gaussian_state(kGrid, 0.0, -1.0), std::invalid_argument);
  EXPECT_NO_THROW(gaussian_state(kGrid, 15.0, 1.0));
}

TEST(SupportGuard, FlagsWrappedMass) {
  const SpectralAmplitude centred = gaussian_state(kGrid, 0.0, 1.0);
  EXPECT_LT(out_of_band_mass(centred), 1e-12);
  EXPECT_NO_THROW(require_support(centred, "centred"));
  const SpectralAmplitude late = time_displace(centred, 18.0, Guard::Skip);
  EXPECT_GT(out_of_band_mass(late), 0.1);
  EXPECT_THROW(require_support(late, "late"), SupportGuardError);
}

TEST(Overlap, FidelityAndGridChecks) {
  const SpectralAmplitude a = gaussian_state(kGrid, -2.0, 0.5);
  const SpectralAmplitude b = gaussian_state(kGrid, 2.0, 0.5);
  EXPECT_NEAR(fidelity(a, a), 1.0, 1e-14);
  EXPECT_NEAR(fidelity(a, b), std::exp(-16.0 / (4.0 * 0.25)), 1e-12);
  const SpectralAmplitude even = superposition(1.0, a, 1.0, b);
  const SpectralAmplitude odd = superposition(1.0, a, -1.0, b);
  EXPECT_LT(std::abs(overlap(even, odd)), 1e-12);
  const SpectralAmplitude other = gaussian_state(FrequencyGrid::balanced(128), 0.0, 1.0);
  EXPECT_THROW(overlap(a, other), GridMismatchError);
  EXPECT_THROW(superposition(1.0, a, -1.0, a), Error);
}

TEST(Superposition, MomentsOfSymmetricCat) {
  const SpectralAmplitude a = gaussian_state(kGrid, -3.0, 0.5);
  const SpectralAmplitude b = gaussian_state(kGrid, 3.0, 0.5);
  const Moments m = moments(superposition(1.0, a, 1.0, b));
  EXPECT_NEAR(m.mean_frequency, 0.0, 1e-12);
  EXPECT_NEAR(m.frequency_width, std::sqrt(9.0 + 0.25), 1e-6);
}

TEST(DensityMatrix, PurityOfPureAndMixed) {
  const SpectralAmplitude a = gaussian_state(kGrid, -3.0, 0.5);
  const SpectralAmplitude b = gaussian_state(kGrid, 3.0, 0.5);
  EXPECT_NEAR(purity(to_density(a)), 1.0, 1e-12);
  const std::vector<double> w{0.5, 0.5};
  const std::vector<SpectralAmplitude> states{a, b};
  const SpectralDensityMatrix rho = mix(w, states);
  EXPECT_NO_THROW(rho.validate());
  EXPECT_NEAR(purity(rho), 0.5, 1e-10);
  const std::vector<double> bad{0.7, 0.7};
  EXPECT_THROW(mix(bad, states), std::invalid_argument);
}

TEST(DensityMatrix, SingleStateMixIsPure) {
  const SpectralAmplitude a = gaussian_state(kGrid, 0.7, 0.9, 0.2);
  const std::vector<double> w{1.0};
  const std::vector<SpectralAmplitude> states{a};
  EXPECT_LT((mix(w, states).matrix() - to_density(a).matrix()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(DensityMatrix, RejectsNonHermitian) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(256, 256);
  m(128, 128) = 1.0 / kGrid.spacing();
  m(127, 128) = Complex(0.0, 1.0);
  EXPECT_THROW(SpectralDensityMatrix(kGrid, m), std::invalid_argument);
}

TEST(ProductJsa, MarginalsAndTemporalAmplitude) {
  const FrequencyGrid g = FrequencyGrid::balanced(64);
  const SpectralAmplitude s = gaussian_state(g, -0.5, 0.8, 0.1);
  const SpectralAmplitude i = gaussian_state(g, 0.7, 1.0);
  const JointSpectralAmplitude jsa = product_jsa(s, i);
  EXPECT_NEAR(jsa.norm(), 1.0, 1e-12);
  const auto [ps, pi] = jsa_marginals(jsa);
  EXPECT_LT((ps - s.spectral_intensity()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((pi - i.spectral_intensity()).cwiseAbs().maxCoeff(), 1e-12);
  const ComplexMatrix jta = joint_temporal_amplitude(jsa);
  const Eigen::VectorXcd ts = to_time_domain(s);
  const Eigen::VectorXcd ti = to_time_domain(i);
  EXPECT_LT((jta - ComplexMatrix(ts * ti.transpose())).cwiseAbs().maxCoeff(), 1e-12);
  const ComplexMatrix mixed = joint_amplitude_in(jsa, Domain::Time, Domain::Frequency);
  EXPECT_LT((mixed - ComplexMatrix(ts * i.amplitudes().transpose())).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(TimeDomain, RoundTripPreservesState) {
  std::mt19937_64 rng(9);
  const SpectralAmplitude psi = testing::random_state(rng, kGrid);
  const SpectralAmplitude back = from_time_domain(kGrid, to_time_domain(psi));
  EXPECT_LT((back.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

// Heisenberg floor on random states.
TEST(Moments, UncertaintyProductBounded) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const Moments m = moments(testing::random_state(rng, kGrid));
    EXPECT_GE(m.frequency_width * m.time_width, 0.5 - 1e-9);
  }
}

}  // namespace
}  // namespace tfcv
