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


#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "tfcv/codes.hpp"
#include "tfcv/fourier.hpp"
#include "tfcv/gates.hpp"
#include "tfcv/phasespace.hpp"
#include "tfcv/schmidt.hpp"
#include "tfcv/spdc.hpp"
#include "tfcv/states.hpp"

namespace {

tfcv::JointSpectralAmplitude entangled_pair(std::size_t n) {
  const auto grid = tfcv::FrequencyGrid::balanced(n);
  tfcv::GaussianJsaSpec spec;
  spec.delta_plus = 0.5;
  spec.delta_minus = 1.4;
  return tfcv::gaussian_jsa(spec, grid, grid);
}

void BM_CenteredDft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto psi = tfcv::gaussian_state(tfcv::FrequencyGrid::balanced(n), 0.5, 1.0, 0.1);
  std::vector<tfcv::Complex> data(psi.amplitudes().data(), psi.amplitudes().data() + n);
  for (auto _ : state) {
    tfcv::centered_dft(data, tfcv::Direction::Forward);
    benchmark::DoNotOptimize(data.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CenteredDft)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNLogN);

void BM_FracFourier(benchmark::State& state) {
  const auto psi = tfcv::gaussian_state(tfcv::FrequencyGrid::balanced(state.range(0)), 0.5, 1.0, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(tfcv::frac_fourier(psi, 0.7));
}
BENCHMARK(BM_FracFourier)->Arg(256)->Arg(1024);

void BM_Wigner(benchmark::State& state) {
  const auto psi = tfcv::gaussian_state(tfcv::FrequencyGrid::balanced(state.range(0)), 0.5, 1.0, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(tfcv::wigner(psi));
}
BENCHMARK(BM_Wigner)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_BeamSplitter(benchmark::State& state) {
  const auto jsa = entangled_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tfcv::freq_beam_splitter(jsa));
}
BENCHMARK(BM_BeamSplitter)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SchmidtDecompose(benchmark::State& state) {
  const auto jsa = entangled_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tfcv::schmidt_decompose(jsa));
}
BENCHMARK(BM_SchmidtDecompose)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_HomScan(benchmark::State& state) {
  const auto jsa = entangled_pair(256);
  const Eigen::VectorXd delays = Eigen::VectorXd::LinSpaced(state.range(0), -4.0, 4.0);
  const std::span<const double> view(delays.data(), static_cast<std::size_t>(delays.size()));
  for (auto _ : state) benchmark::DoNotOptimize(tfcv::hom_coincidence(jsa, view));
}
BENCHMARK(BM_HomScan)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_LogicalErrorRate(benchmark::State& state) {
  tfcv::CodeSpec spec;
  const tfcv::FrequencyGrid grid = tfcv::FrequencyGrid::balanced(512);
  const auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tfcv::logical_error_rate(spec, grid, 0.3, 0.0, trials, 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LogicalErrorRate)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
