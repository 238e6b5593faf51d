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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tfcv/error.hpp"
#include "tfcv/gates.hpp"
#include "tfcv/operators.hpp"
#include "tfcv/schmidt.hpp"

namespace tfcv {
namespace {

constexpr double kPi = std::numbers::pi;
const FrequencyGrid kGrid = FrequencyGrid::balanced(256);

double gap(const SpectralAmplitude& a, const SpectralAmplitude& b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

SpectralAmplitude probe() {
  return superposition(1.0, gaussian_state(kGrid, -1.0, 0.8, 0.1), Complex(0.4, 0.6), gaussian_state(kGrid, 1.5, 0.6));
}

// Hermite-Gauss functions h_n(omega) ~ H_n(omega) exp(-omega^2 / 2).
SpectralAmplitude hermite_gauss(int n) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(kGrid.size()));
  for (std::size_t k = 0; k < kGrid.size(); ++k) {
    const double w = kGrid.frequency(k);
    const double h = n == 0 ? 1.0 : n == 1 ? 2.0 * w : 4.0 * w * w - 2.0;
    v[static_cast<Eigen::Index>(k)] = h * std::exp(-0.5 * w * w);
  }
  return SpectralAmplitude::normalized(kGrid, v);
}

TEST(Displacements, ShiftMeans) {
  const SpectralAmplitude psi = gaussian_state(kGrid, 0.3, 0.9, 0.05);
  const Moments before = moments(psi);
  const Moments t = moments(time_displace(psi, 2.5));
  EXPECT_NEAR(t.mean_time - before.mean_time, 2.5, 1e-10);
  EXPECT_NEAR(t.mean_frequency, before.mean_frequency, 1e-12);
  const Moments f = moments(freq_displace(psi, -1.75));
  EXPECT_NEAR(f.mean_frequency - before.mean_frequency, -1.75, 1e-10);
  EXPECT_NEAR(f.time_width, before.time_width, 1e-10);
}

TEST(Displacements, FrequencyShiftThreeRoutes) {
  const SpectralAmplitude psi = probe();
  const double mu = 9.0 * kGrid.spacing();
  const SpectralAmplitude ramp = freq_displace(psi, mu);
  const SpectralAmplitude bins = freq_displace_by_bins(psi, mu);
  // exp(-i mu t) = F^dagger exp(i mu omega) F.
  const SpectralAmplitude conjugated = inverse_fourier(time_displace(fourier(psi), mu));
  EXPECT_LT(gap(ramp, bins), 1e-12);
  EXPECT_LT(gap(ramp, conjugated), 1e-10);
  EXPECT_THROW(freq_displace_by_bins(psi, 0.5 * kGrid.spacing()), std::invalid_argument);
}

TEST(Displacements, WeylExchangePhase) {
  const SpectralAmplitude psi = probe();
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (int i = 0; i < 8; ++i) {
    const double s = u(rng);
    const double mu = u(rng);
    const SpectralAmplitude a = time_displace(freq_displace(psi, mu), s);
    const SpectralAmplitude b = freq_displace(time_displace(psi, s), mu);
    EXPECT_LT(max_distance_up_to_phase(a, b), 1e-10);
    EXPECT_NEAR(global_phase(b, a), kWeylPhaseFactor * s * mu, 1e-10);
  }
}

TEST(Displacements, GuardRejectsWrap) {
  const SpectralAmplitude psi = gaussian_state(kGrid, 0.0, 1.0);
  EXPECT_THROW(time_displace(psi, 19.0), SupportGuardError);
  EXPECT_THROW(freq_displace(psi, 19.0), SupportGuardError);
  EXPECT_NO_THROW(time_displace(psi, 19.0, Guard::Skip));
}

TEST(FractionalFourier, HermiteGaussEigenvalues) {
  for (int n = 0; n <= 2; ++n) {
    const SpectralAmplitude h = hermite_gauss(n);
    for (double theta : {0.3, kPi / 2, 2.0, -2.7, 4.0}) {
      const SpectralAmplitude out = frac_fourier(h, theta);
      const Complex expected = std::polar(1.0, theta * (n + 0.5));
      EXPECT_LT((out.amplitudes() - expected * h.amplitudes()).cwiseAbs().maxCoeff(), 1e-10)
          << "n=" << n << " theta=" << theta;
    }
  }
}

TEST(FractionalFourier, ComposesAdditively) {
  const SpectralAmplitude psi = probe();
  const SpectralAmplitude two_step = frac_fourier(frac_fourier(psi, 0.7), 1.1);
  EXPECT_LT(gap(two_step, frac_fourier(psi, 1.8)), 1e-10);
  EXPECT_LT(gap(frac_fourier(psi, 2.0 * kPi), SpectralAmplitude(kGrid, -psi.amplitudes())), 1e-10);
  const SpectralAmplitude half_turn = frac_fourier(psi, kPi);
  EXPECT_LT(gap(half_turn, SpectralAmplitude(kGrid, Complex(0.0, 1.0) * parity(psi).amplitudes())), 1e-10);
  EXPECT_LT(gap(frac_fourier(psi, kPi / 2), fourier(psi)), 1e-12);
  EXPECT_LT(gap(inverse_fourier(fourier(psi)), psi), 1e-12);
}

TEST(FractionalFourier, FourierSwapsMoments) {
  const SpectralAmplitude psi = time_displace(gaussian_state(kGrid, 1.0, 0.7, 0.1), -2.0);
  const Moments in = moments(psi);
  const Moments out = moments(fourier(psi));
  EXPECT_NEAR(out.mean_frequency, -in.mean_time, 1e-9);
  EXPECT_NEAR(out.mean_time, in.mean_frequency, 1e-9);
  EXPECT_NEAR(out.frequency_width, in.time_width, 1e-9);
  EXPECT_NEAR(out.time_width, in.frequency_width, 1e-9);
}

TEST(DiagonalGates, PhasesAreExact) {
  const SpectralAmplitude psi = probe();
  const SpectralAmplitude q = quad_phase(psi, 0.2);
  const SpectralAmplitude c = cubic_phase(psi, -0.05);
  for (std::size_t k = 0; k < kGrid.size(); k += 17) {
    const auto i = static_cast<Eigen::Index>(k);
    const double w = kGrid.frequency(k);
    EXPECT_LT(std::abs(q[i] - psi[i] * std::polar(1.0, 0.2 * w * w)), 1e-14);
    EXPECT_LT(std::abs(c[i] - psi[i] * std::polar(1.0, -0.05 * w * w * w)), 1e-14);
  }
  EXPECT_LT(gap(diag_phase(psi, [](double w) { return 0.2 * w * w; }), q), 1e-14);
  EXPECT_THROW(diag_phase(psi, [](double) { return std::nan(""); }), std::invalid_argument);
  EXPECT_EQ(parity(parity(psi)).amplitudes(), psi.amplitudes());
}

TEST(DiagonalGates, CommuteExactly) {
  const SpectralAmplitude psi = probe();
  const auto f = [](double w) { return std::sin(w) - 0.1 * w * w * w * w; };
  EXPECT_LT(gap(quad_phase(cubic_phase(psi, 0.3), -0.2), cubic_phase(quad_phase(psi, -0.2), 0.3)), 1e-14);
  EXPECT_LT(gap(diag_phase(quad_phase(psi, 0.4), f), quad_phase(diag_phase(psi, f), 0.4)), 1e-14);
  EXPECT_LT(gap(parity(cubic_phase(psi, 0.1)), cubic_phase(parity(psi), -0.1)), 1e-14);
}

TEST(Unitarity, SinglePhotonGatesPreserveNorm) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 10; ++trial) {
    const SpectralAmplitude psi = testing::random_state(rng, kGrid);
    for (const SpectralAmplitude& out :
         {time_displace(psi, 0.7), freq_displace(psi, -0.9), frac_fourier(psi, 0.37), fourier(psi),
          inverse_fourier(psi), parity(psi), quad_phase(psi, 0.15), cubic_phase(psi, -0.05),
          diag_phase(psi, [](double w) { return std::cos(2.0 * w); })}) {
      EXPECT_NEAR(out.norm(), 1.0, 1e-10);
    }
  }
}

TEST(Operators, TimeOperatorIsDerivative) {
  const double w = 0.9;
  const SpectralAmplitude psi = gaussian_state(kGrid, 0.0, w);
  const Eigen::VectorXcd t_psi = apply_time_operator(kGrid, psi.amplitudes());
  // -i d/domega exp(-omega^2 / (4 w^2)) = i omega / (2 w^2) exp(...).
  for (std::size_t k = 0; k < kGrid.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    const Complex expected = Complex(0.0, kGrid.frequency(k) / (2.0 * w * w)) * psi[i];
    EXPECT_LT(std::abs(t_psi[i] - expected), 1e-10);
  }
  const Eigen::VectorXcd w_psi = apply_frequency_operator(kGrid, psi.amplitudes());
  EXPECT_LT(std::abs(w_psi[130] - kGrid.frequency(130) * psi[130]), 1e-15);
}

TEST(Operators, CanonicalCommutator) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 5; ++i) EXPECT_LT(commutator_residual(testing::random_chirped_gaussian(rng, kGrid)), 1e-9);
}

// --- Pair gates --------------------------------------------------------------

const FrequencyGrid kPairGrid = FrequencyGrid::balanced(128);

JointSpectralAmplitude analytic_jsa(const std::function<Complex(double, double)>& f) {
  ComplexMatrix m(128, 128);
  for (std::size_t k = 0; k < 128; ++k)
    for (std::size_t l = 0; l < 128; ++l)
      m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = f(kPairGrid.frequency(k), kPairGrid.frequency(l));
  return JointSpectralAmplitude::normalized(kPairGrid, kPairGrid, m);
}

Complex skew_gaussian(double x, double y) {
  const double a = x - 0.8;
  const double b = y + 0.4;
  return std::exp(-(a * a) / 2.0 - (b * b) / 1.2 - 0.3 * a * b) * std::polar(1.0, 0.2 * a - 0.1 * a * b);
}

double pair_gap(const JointSpectralAmplitude& a, const JointSpectralAmplitude& b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

TEST(PairGates, ApplyLocalActsOnOnePhoton) {
  const SpectralAmplitude s = gaussian_state(kPairGrid, -1.0, 0.8);
  const SpectralAmplitude i = gaussian_state(kPairGrid, 0.5, 1.0, 0.1);
  const JointSpectralAmplitude jsa = product_jsa(s, i);
  const auto shift = [](const FrequencyGrid& g, Eigen::VectorXcd& v) { kernels::time_shift(g, v, 1.3); };
  EXPECT_LT(pair_gap(apply_local(jsa, Photon::Signal, shift), product_jsa(time_displace(s, 1.3), i)), 1e-12);
  EXPECT_LT(pair_gap(apply_local(jsa, Photon::Idler, shift), product_jsa(s, time_displace(i, 1.3))), 1e-12);
}

TEST(PairGates, ConditionalShiftMovesIdler) {
  const SpectralAmplitude s = gaussian_state(kPairGrid, 1.5, 0.3);
  const SpectralAmplitude i = gaussian_state(kPairGrid, 3.0, 0.3);
  const JointSpectralAmplitude out = cond_freq_time(product_jsa(s, i));
  const auto [ps, pi] = jsa_marginals(out);
  const Eigen::VectorXd w = kPairGrid.frequencies();
  EXPECT_NEAR(ps.dot(w) / ps.sum(), 1.5, 1e-8);
  EXPECT_NEAR(pi.dot(w) / pi.sum(), 1.5, 1e-8);
  const JointSpectralAmplitude sym = cond_freq_time(product_jsa(i, s), Photon::Signal);
  EXPECT_LT((sym.amplitudes().transpose() - out.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PairGates, ConditionalFrequencyPhase) {
  const JointSpectralAmplitude jsa = analytic_jsa(skew_gaussian);
  const JointSpectralAmplitude out = cond_freq_freq(jsa);
  for (std::size_t k = 0; k < 128; k += 9) {
    for (std::size_t l = 0; l < 128; l += 7) {
      const auto r = static_cast<Eigen::Index>(k);
      const auto c = static_cast<Eigen::Index>(l);
      const Complex expected = jsa.amplitudes()(r, c) * std::polar(1.0, kPairGrid.frequency(k) * kPairGrid.frequency(l));
      EXPECT_LT(std::abs(out.amplitudes()(r, c) - expected), 1e-14);
    }
  }
}

TEST(Unitarity, PairGatesPreserveNorm) {
  std::mt19937_64 rng(1618);
  for (int trial = 0; trial < 5; ++trial) {
    const SpectralAmplitude s = testing::random_chirped_gaussian(rng, kPairGrid, 1.0);
    const SpectralAmplitude i = testing::random_chirped_gaussian(rng, kPairGrid, 1.0);
    const JointSpectralAmplitude jsa = product_jsa(s, i);
    for (const JointSpectralAmplitude& out :
         {cond_freq_time(jsa, Photon::Idler, Guard::Skip), cond_freq_time(jsa, Photon::Signal, Guard::Skip),
          cond_freq_freq(jsa), freq_beam_splitter(jsa)}) {
      EXPECT_NEAR(out.norm(), 1.0, 1e-10);
    }
  }
}

TEST(BeamSplitter, MatchesRotatedAnalyticJsa) {
  const JointSpectralAmplitude jsa = analytic_jsa(skew_gaussian);
  const JointSpectralAmplitude out = freq_beam_splitter(jsa);
  const double r2 = 1.0 / std::numbers::sqrt2;
  const JointSpectralAmplitude expected =
      analytic_jsa([r2](double x, double y) { return skew_gaussian((x - y) * r2, (x + y) * r2); });
  EXPECT_LT(pair_gap(out, expected), 1e-10);
}

TEST(BeamSplitter, SquareIsSwapWithParity) {
  const JointSpectralAmplitude jsa = analytic_jsa(skew_gaussian);
  const JointSpectralAmplitude twice = freq_beam_splitter(freq_beam_splitter(jsa));
  const JointSpectralAmplitude expected = analytic_jsa([](double x, double y) { return skew_gaussian(-y, x); });
  EXPECT_LT(pair_gap(twice, expected), 1e-10);
  JointSpectralAmplitude cycle = jsa;
  for (int i = 0; i < 8; ++i) cycle = freq_beam_splitter(cycle);
  EXPECT_LT(pair_gap(cycle, jsa), 1e-10);
}

TEST(BeamSplitter, SeparatesSumDifferenceProduct) {
  const auto g = [](double u, double w) { return std::exp(-u * u / (4 * w * w)); };
  const double r2 = 1.0 / std::numbers::sqrt2;
  const JointSpectralAmplitude jsa =
      analytic_jsa([&](double x, double y) { return Complex(g((x + y) * r2, 0.5) * g((x - y) * r2 - 0.5, 1.5)); });
  EXPECT_GT(schmidt_number(schmidt_decompose(jsa)), 1.5);
  EXPECT_NEAR(schmidt_number(schmidt_decompose(freq_beam_splitter(jsa))), 1.0, 1e-9);
}

double bilinear_gap(std::size_t n) {
  const FrequencyGrid grid = FrequencyGrid::balanced(n);
  std::mt19937_64 rng(404);
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (int term = 0; term < 3; ++term) {
    const SpectralAmplitude s = testing::random_state(rng, grid);
    const SpectralAmplitude i = testing::random_state(rng, grid);
    m += product_jsa(s, i).amplitudes();
  }
  const JointSpectralAmplitude jsa = JointSpectralAmplitude::normalized(grid, grid, m);
  const ComplexMatrix reference = testing::bilinear_rotation(jsa);
  return (freq_beam_splitter(jsa).amplitudes() - reference).norm() / reference.norm();
}

TEST(BeamSplitter, ConvergesToBilinearRotation) {
  const double coarse = bilinear_gap(128);
  const double fine = bilinear_gap(512);
  EXPECT_LT(coarse, 2e-2);
  EXPECT_LT(fine, 0.35 * coarse);
}

TEST(BeamSplitter, GuardRejectsCornerMass) {
  const JointSpectralAmplitude corner =
      product_jsa(gaussian_state(kPairGrid, 8.0, 0.5), gaussian_state(kPairGrid, 8.0, 0.5));
  EXPECT_GT(out_of_disc_mass(corner), 0.5);
  EXPECT_THROW(freq_beam_splitter(corner), SupportGuardError);
}

TEST(PhaseBookkeeping, GlobalPhase) {
  const SpectralAmplitude psi = probe();
  const SpectralAmplitude rotated(kGrid, std::polar(1.0, 0.7) * psi.amplitudes());
  EXPECT_NEAR(global_phase(psi, rotated), 0.7, 1e-12);
  EXPECT_LT(max_distance_up_to_phase(psi, rotated), 1e-14);
}

}  // namespace
}  // namespace tfcv
