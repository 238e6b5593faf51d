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

#include "tfcv/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tfcv {
namespace {

// FFTW's planner is not thread-safe, fftw_execute_dft is. Plans are built
// with FFTW_ESTIMATE so results never depend on timing measurements.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = plans_.find({n, sign});
    if (it != plans_.end()) return it->second;
    std::vector<Complex> scratch(static_cast<std::size_t>(n));
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw std::runtime_error("FFTW failed to create a plan");
    plans_.emplace(std::make_pair(n, sign), plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

void centered_dft(std::span<Complex> data, Direction direction) {
  const std::size_t n = data.size();
  if (n == 0 || n % 4 != 0) {
    throw std::invalid_argument("centered_dft needs a length divisible by 4");
  }
  // exp(-2 pi i (k - N/2)(j - N/2)/N) = (-1)^k (-1)^j exp(-2 pi i k j / N)
  // whenever N/2 is even.
  for (std::size_t k = 1; k < n; k += 2) data[k] = -data[k];
  const int sign = direction == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan_cache().get(static_cast<int>(n), sign), buf, buf);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    data[j] *= (j % 2 == 0) ? scale : -scale;
  }
}

void centered_dft_rows(ComplexMatrix& m, Direction direction) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    centered_dft(std::span<Complex>(m.row(r).data(), static_cast<std::size_t>(m.cols())), direction);
  }
}

void centered_dft_cols(ComplexMatrix& m, Direction direction) {
  std::vector<Complex> column(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) column[static_cast<std::size_t>(r)] = m(r, c);
    centered_dft(column, direction);
    for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, c) = column[static_cast<std::size_t>(r)];
  }
}

Eigen::VectorXcd frequency_to_time(const FrequencyGrid& grid, const Eigen::VectorXcd& spectral) {
  if (static_cast<std::size_t>(spectral.size()) != grid.size()) {
    throw std::invalid_argument("amplitude length does not match grid");
  }
  Eigen::VectorXcd out = spectral;
  centered_dft(std::span<Complex>(out.data(), grid.size()), Direction::Forward);
  out *= std::sqrt(grid.spacing() / grid.time_spacing());
  return out;
}

Eigen::VectorXcd time_to_frequency(const FrequencyGrid& grid, const Eigen::VectorXcd& temporal) {
  if (static_cast<std::size_t>(temporal.size()) != grid.size()) {
    throw std::invalid_argument("amplitude length does not match grid");
  }
  Eigen::VectorXcd out = temporal;
  centered_dft(std::span<Complex>(out.data(), grid.size()), Direction::Inverse);
  out *= std::sqrt(grid.time_spacing() / grid.spacing());
  return out;
}

Eigen::VectorXcd interpolate_half_step(const Eigen::VectorXcd& samples, Domain domain) {
  const auto n = static_cast<std::size_t>(samples.size());
  const Direction to_conjugate =
      domain == Domain::Frequency ? Direction::Forward : Direction::Inverse;
  const Direction back = domain == Domain::Frequency ? Direction::Inverse : Direction::Forward;

  Eigen::VectorXcd conjugate = samples;
  centered_dft(std::span<Complex>(conjugate.data(), n), to_conjugate);

  // Conjugate coordinate j - N/2 lands at padded index j + N/2.
  Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(2 * n));
  padded.segment(static_cast<Eigen::Index>(n / 2), static_cast<Eigen::Index>(n)) = conjugate;
  centered_dft(std::span<Complex>(padded.data(), 2 * n), back);
  padded *= std::sqrt(2.0);
  return padded;
}

Eigen::VectorXcd reflect(const Eigen::VectorXcd& samples) {
  const Eigen::Index n = samples.size();
  Eigen::VectorXcd out(n);
  for (Eigen::Index k = 0; k < n; ++k) out[k] = samples[(n - k) % n];
  return out;
}

}  // namespace tfcv
