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

#ifndef TFCV_CIRCUIT_HPP
#define TFCV_CIRCUIT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfcv/gates.hpp"

namespace tfcv {

enum class GateKind {
  TimeDisplace,      // "s"
  FreqDisplace,      // "mu"
  Fourier,
  FracFourier,       // "theta"
  QuadPhase,         // "s"
  CubicPhase,        // "gamma"
  DiagPhase,         // "coefficients": f(omega) = sum_n c_n omega^n
  CondFreqTime,      // target photon is shifted by the other photon's frequency
  CondFreqFreq,
  FreqBeamSplitter,
};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// True for gates that act on a photon pair.
bool is_two_photon(GateKind kind);

struct GateDescriptor {
  GateKind kind = GateKind::Fourier;
  double parameter = 0.0;
  std::vector<double> coefficients;
  int target = 0;

  friend bool operator==(const GateDescriptor&, const GateDescriptor&) = default;
};

struct Circuit {
  std::vector<GateDescriptor> gates;

  /// 2 if any gate needs a pair or targets photon 1, else 1.
  int min_arity() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Throws Error (with gate index) for non-finite parameters or targets that
/// do not exist for the given arity.
void validate(const Circuit& circuit, int arity);

/// Parses [{"gate": "TimeDisplace", "s": 2.0, "target": 0}, ...]. Unknown
/// gate names, unknown keys and missing parameters throw FormatError with
/// the gate index.
Circuit parse_circuit(std::string_view json_text);
std::string circuit_to_json(const Circuit& circuit);

/// Applies gates left to right. The first failing gate aborts; the rethrown
/// error keeps its type and carries the gate index.
SpectralAmplitude apply_circuit(const SpectralAmplitude& psi, const Circuit& circuit,
                                Guard guard = Guard::Enforce);
JointSpectralAmplitude apply_circuit(const JointSpectralAmplitude& jsa, const Circuit& circuit,
                                     Guard guard = Guard::Enforce);

SpectralAmplitude apply_gate(const SpectralAmplitude& psi, const GateDescriptor& gate,
                             Guard guard = Guard::Enforce);
JointSpectralAmplitude apply_gate(const JointSpectralAmplitude& jsa, const GateDescriptor& gate,
                                  Guard guard = Guard::Enforce);

}  // namespace tfcv

#endif  // TFCV_CIRCUIT_HPP
