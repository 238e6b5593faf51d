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
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tfcv/schmidt.hpp"
#include "tfcv/spdc.hpp"

namespace tfcv {
namespace {

const FrequencyGrid kGrid = FrequencyGrid::balanced(128);

JointSpectralAmplitude ratio_jsa(double r) {
  GaussianJsaSpec spec;
  spec.delta_minus = 1.5;
  spec.delta_plus = r * 1.5;
  return gaussian_jsa(spec, kGrid, kGrid);
}

TEST(Schmidt, GeometricSpectrumOfGaussianJsa) {
  const double r = 0.4;
  const SchmidtDecomposition d = schmidt_decompose(ratio_jsa(r));
  // Lambda_n^2 = (1 - x) x^n with x = ((1 - r) / (1 + r))^2.
  const double x = std::pow((1.0 - r) / (1.0 + r), 2);
  for (int n = 0; n < 8; ++n) {
    EXPECT_NEAR(d.coefficients[n], std::sqrt((1.0 - x) * std::pow(x, n)), 1e-9) << n;
  }
  EXPECT_NEAR(d.coefficients.squaredNorm(), 1.0, 1e-12);
  EXPECT_NEAR(schmidt_number(d), testing::gaussian_jsa_schmidt_number(r), 1e-9);
}

TEST(Schmidt, AgreesWithIndependentRoutes) {
  std::mt19937_64 rng(3);
  const JointSpectralAmplitude jsa = product_jsa(testing::random_state(rng, kGrid), testing::random_state(rng, kGrid));
  const JointSpectralAmplitude mixed = ratio_jsa(0.3);
  for (const auto* j : {&jsa, &mixed}) {
    const double k = schmidt_number(schmidt_decompose(*j));
    EXPECT_NEAR(k, testing::jacobi_schmidt_number(*j), 1e-9);
    EXPECT_NEAR(k, testing::reduced_purity_schmidt_number(*j), 1e-9);
  }
  EXPECT_NEAR(schmidt_number(schmidt_decompose(jsa)), 1.0, 1e-10);
}

TEST(Schmidt, InvariantUnderLocalPhasesAndSwap) {
  const JointSpectralAmplitude jsa = ratio_jsa(0.25);
  ComplexMatrix phased = jsa.amplitudes();
  for (Eigen::Index k = 0; k < phased.rows(); ++k) {
    for (Eigen::Index l = 0; l < phased.cols(); ++l) {
      const double ws = kGrid.frequency(static_cast<std::size_t>(k));
      const double wi = kGrid.frequency(static_cast<std::size_t>(l));
      phased(k, l) *= std::polar(1.0, 0.3 * ws * ws * ws + std::sin(wi));
    }
  }
  const Eigen::VectorXd base = schmidt_decompose(jsa).coefficients;
  const Eigen::VectorXd local = schmidt_decompose(JointSpectralAmplitude(kGrid, kGrid, phased)).coefficients;
  const Eigen::VectorXd swapped =
      schmidt_decompose(JointSpectralAmplitude(kGrid, kGrid, jsa.amplitudes().transpose())).coefficients;
  EXPECT_LT((local - base).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LT((swapped - base).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Schmidt, ModesAreOrthonormalAndReconstruct) {
  const JointSpectralAmplitude jsa = ratio_jsa(0.35);
  const SchmidtDecomposition d = schmidt_decompose(jsa);
  ASSERT_GE(d.rank(), 5u);
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = 0; b < 5; ++b) {
      const double expected = a == b ? 1.0 : 0.0;
      EXPECT_NEAR(std::abs(overlap(d.signal_modes[a], d.signal_modes[b])), expected, 1e-10);
      EXPECT_NEAR(std::abs(overlap(d.idler_modes[a], d.idler_modes[b])), expected, 1e-10);
    }
  }
  EXPECT_LT((reconstruct(d) - jsa.amplitudes()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Schmidt, TruncationAndFlag) {
  const SchmidtDecomposition full = schmidt_decompose(ratio_jsa(0.3));
  const SchmidtDecomposition top = schmidt_decompose(ratio_jsa(0.3), 3);
  ASSERT_EQ(top.rank(), 3u);
  EXPECT_NEAR(top.coefficients[2], full.coefficients[2], 1e-12);
  EXPECT_TRUE(entangled_flag(full, 8));
  EXPECT_FALSE(entangled_flag(full, 1));
  EXPECT_FALSE(entangled_flag(schmidt_decompose(ratio_jsa(1.0)), 8));
  EXPECT_THROW(entangled_flag(full, 0), std::invalid_argument);
}

TEST(Schmidt, ParticipationRatio) {
  const std::vector<double> equal{0.5, 0.5, 0.5, 0.5};
  EXPECT_NEAR(schmidt_number(equal), 4.0, 1e-12);
  const std::vector<double> single{1.0};
  EXPECT_NEAR(schmidt_number(single), 1.0, 1e-12);
  const std::vector<double> unnormalized{2.0, 2.0};
  EXPECT_NEAR(schmidt_number(unnormalized), 2.0, 1e-12);
}

TEST(BlochMessiah, SeparatesCorrelatedGaussian) {
  const SeparationResult r = bloch_messiah_separate(ratio_jsa(0.25));
  EXPECT_NEAR(r.before_k, testing::gaussian_jsa_schmidt_number(0.25), 1e-8);
  EXPECT_NEAR(r.after_k, 1.0, 1e-9);
  EXPECT_NEAR(r.state.norm(), 1.0, 1e-12);
}

}  // namespace
}  // namespace tfcv
