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

#ifndef TFCV_RUNNER_RUNNER_HPP
#define TFCV_RUNNER_RUNNER_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tfcv_runner/config.hpp"

namespace tfcv::runner {

struct RunReport {
  std::vector<std::filesystem::path> files;  ///< relative to the output directory, manifest last
};

/// Builds the source, applies the circuit, runs every requested analysis
/// and writes manifest.json. Library errors propagate unchanged.
RunReport run(const RunConfig& config);

/// Lower-case hex SHA-256 digest.
std::string sha256_hex(std::string_view bytes);

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitGuard = 3;

}  // namespace tfcv::runner

#endif  // TFCV_RUNNER_RUNNER_HPP
