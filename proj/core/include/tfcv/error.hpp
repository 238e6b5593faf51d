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

#ifndef TFCV_ERROR_HPP
#define TFCV_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace tfcv {

/// Base class for every error raised by the library. Argument validation
/// failures use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::optional<std::size_t> gate_index = std::nullopt)
      : std::runtime_error(what), gate_index_(gate_index) {}

  /// Set when the error was raised while applying a circuit.
  std::optional<std::size_t> gate_index() const { return gate_index_; }

 private:
  std::optional<std::size_t> gate_index_;
};

/// Probability mass too close to the cyclic grid boundary.
class SupportGuardError : public Error {
 public:
  using Error::Error;
};

/// Two states (or a state and an operation) live on different grids.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input (state files, circuit files).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace tfcv

#endif  // TFCV_ERROR_HPP
