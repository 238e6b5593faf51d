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

#include "tfcv/circuit.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "tfcv/error.hpp"

namespace tfcv {
namespace {

using nlohmann::json;

struct KindInfo {
  GateKind kind;
  std::string_view name;
  std::string_view parameter;  // empty when the gate takes none
  bool two_photon;
};

constexpr std::array<KindInfo, 10> kKinds{{
    {GateKind::TimeDisplace, "TimeDisplace", "s", false},
    {GateKind::FreqDisplace, "FreqDisplace", "mu", false},
    {GateKind::Fourier, "Fourier", "", false},
    {GateKind::FracFourier, "FracFourier", "theta", false},
    {GateKind::QuadPhase, "QuadPhase", "s", false},
    {GateKind::CubicPhase, "CubicPhase", "gamma", false},
    {GateKind::DiagPhase, "DiagPhase", "coefficients", false},
    {GateKind::CondFreqTime, "CondFreqTime", "", true},
    {GateKind::CondFreqFreq, "CondFreqFreq", "", true},
    {GateKind::FreqBeamSplitter, "FreqBeamSplitter", "", true},
}};

const KindInfo& info(GateKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw std::logic_error("unhandled gate kind");
}

std::string label(std::size_t index, GateKind kind) {
  return "gate " + std::to_string(index) + " (" + std::string(gate_name(kind)) + "): ";
}

double polynomial(const std::vector<double>& c, double w) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + *it;
  return acc;
}

LocalKernel local_kernel(const GateDescriptor& gate) {
  const double p = gate.parameter;
  switch (gate.kind) {
    case GateKind::TimeDisplace:
      return [p](const FrequencyGrid& g, Eigen::VectorXcd& v) { kernels::time_shift(g, v, p); };
    case GateKind::FreqDisplace:
      return [p](const FrequencyGrid& g, Eigen::VectorXcd& v) { kernels::frequency_shift(g, v, p); };
    case GateKind::Fourier:
      return [](const FrequencyGrid& g, Eigen::VectorXcd& v) {
        kernels::fractional_fourier(g, v, 0.5 * std::numbers::pi);
      };
    case GateKind::FracFourier:
      return [p](const FrequencyGrid& g, Eigen::VectorXcd& v) { kernels::fractional_fourier(g, v, p); };
    case GateKind::QuadPhase:
      return [p](const FrequencyGrid& g, Eigen::VectorXcd& v) {
        kernels::diagonal_phase(g, v, [p](double w) { return p * w * w; });
      };
    case GateKind::CubicPhase:
      return [p](const FrequencyGrid& g, Eigen::VectorXcd& v) {
        kernels::diagonal_phase(g, v, [p](double w) { return p * w * w * w; });
      };
    case GateKind::DiagPhase:
      return [c = gate.coefficients](const FrequencyGrid& g, Eigen::VectorXcd& v) {
        kernels::diagonal_phase(g, v, [&c](double w) { return polynomial(c, w); });
      };
    default:
      throw std::logic_error("not a single-photon gate");
  }
}

bool is_diagonal(GateKind kind) {
  return kind == GateKind::QuadPhase || kind == GateKind::CubicPhase || kind == GateKind::DiagPhase;
}

template <typename State, typename Apply>
State run_gates(State state, const Circuit& circuit, Apply&& apply) {
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const GateDescriptor& gate = circuit.gates[i];
    try {
      state = apply(state, gate);
    } catch (const SupportGuardError& e) {
      throw SupportGuardError(label(i, gate.kind) + e.what(), i);
    } catch (const GridMismatchError& e) {
      throw GridMismatchError(label(i, gate.kind) + e.what(), i);
    } catch (const Error& e) {
      throw Error(label(i, gate.kind) + e.what(), i);
    } catch (const std::invalid_argument& e) {
      throw Error(label(i, gate.kind) + e.what(), i);
    }
  }
  return state;
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

bool is_two_photon(GateKind kind) { return info(kind).two_photon; }

int Circuit::min_arity() const {
  for (const auto& g : gates) {
    if (is_two_photon(g.kind) || g.target != 0) return 2;
  }
  return 1;
}

void validate(const Circuit& circuit, int arity) {
  if (arity != 1 && arity != 2) throw std::invalid_argument("arity must be 1 or 2");
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const GateDescriptor& g = circuit.gates[i];
    if (!std::isfinite(g.parameter)) throw Error(label(i, g.kind) + "parameter is not finite", i);
    for (double c : g.coefficients) {
      if (!std::isfinite(c)) throw Error(label(i, g.kind) + "coefficient is not finite", i);
    }
    if (is_two_photon(g.kind) && arity != 2) {
      throw Error(label(i, g.kind) + "needs a photon pair", i);
    }
    if (g.target < 0 || g.target >= arity) {
      throw Error(label(i, g.kind) + "target " + std::to_string(g.target) + " does not exist", i);
    }
  }
}

Circuit parse_circuit(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("circuit is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw FormatError("circuit must be a JSON array of gates");

  Circuit circuit;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& entry = doc[i];
    const std::string where = "gate " + std::to_string(i) + ": ";
    if (!entry.is_object()) throw FormatError(where + "must be an object", i);
    if (!entry.contains("gate") || !entry["gate"].is_string()) {
      throw FormatError(where + "missing string field \"gate\"", i);
    }
    const auto name = entry["gate"].get<std::string>();
    const auto kind = gate_kind_from_name(name);
    if (!kind) throw FormatError(where + "unknown gate \"" + name + "\"", i);

    GateDescriptor gate;
    gate.kind = *kind;
    gate.target = gate.kind == GateKind::CondFreqTime ? 1 : 0;
    const std::string_view param = info(gate.kind).parameter;
    for (const auto& [key, value] : entry.items()) {
      if (key == "gate") continue;
      if (key == "target") {
        if (!value.is_number_integer()) throw FormatError(where + "\"target\" must be an integer", i);
        gate.target = value.get<int>();
      } else if (!param.empty() && key == param) {
        if (gate.kind == GateKind::DiagPhase) {
          if (!value.is_array() || value.empty()) {
            throw FormatError(where + "\"coefficients\" must be a non-empty array", i);
          }
          for (const auto& c : value) {
            if (!c.is_number()) throw FormatError(where + "\"coefficients\" must hold numbers", i);
            gate.coefficients.push_back(c.get<double>());
          }
        } else {
          if (!value.is_number()) throw FormatError(where + "\"" + key + "\" must be a number", i);
          gate.parameter = value.get<double>();
        }
      } else {
        throw FormatError(where + "unknown key \"" + key + "\" for " + name, i);
      }
    }
    if (!param.empty() && !entry.contains(std::string(param))) {
      throw FormatError(where + name + " needs \"" + std::string(param) + "\"", i);
    }
    circuit.gates.push_back(std::move(gate));
  }
  validate(circuit, circuit.min_arity());
  return circuit;
}

std::string circuit_to_json(const Circuit& circuit) {
  json doc = json::array();
  for (const auto& g : circuit.gates) {
    json entry{{"gate", std::string(gate_name(g.kind))}, {"target", g.target}};
    const std::string param(info(g.kind).parameter);
    if (g.kind == GateKind::DiagPhase) {
      entry[param] = g.coefficients;
    } else if (!param.empty()) {
      entry[param] = g.parameter;
    }
    doc.push_back(std::move(entry));
  }
  return doc.dump();
}

SpectralAmplitude apply_gate(const SpectralAmplitude& psi, const GateDescriptor& gate, Guard guard) {
  if (is_two_photon(gate.kind)) throw Error(std::string(gate_name(gate.kind)) + " needs a photon pair");
  if (gate.target != 0) throw Error("single-photon state has no photon " + std::to_string(gate.target));
  switch (gate.kind) {
    case GateKind::TimeDisplace:
      return time_displace(psi, gate.parameter, guard);
    case GateKind::FreqDisplace:
      return freq_displace(psi, gate.parameter, guard);
    case GateKind::Fourier:
      return fourier(psi, guard);
    case GateKind::FracFourier:
      return frac_fourier(psi, gate.parameter, guard);
    case GateKind::QuadPhase:
      return quad_phase(psi, gate.parameter);
    case GateKind::CubicPhase:
      return cubic_phase(psi, gate.parameter);
    case GateKind::DiagPhase: {
      const auto& c = gate.coefficients;
      return diag_phase(psi, [&c](double w) { return polynomial(c, w); });
    }
    default:
      throw std::logic_error("unhandled gate kind");
  }
}

JointSpectralAmplitude apply_gate(const JointSpectralAmplitude& jsa, const GateDescriptor& gate, Guard guard) {
  switch (gate.kind) {
    case GateKind::CondFreqTime:
      if (gate.target != 0 && gate.target != 1) throw Error("target must be 0 or 1");
      return cond_freq_time(jsa, gate.target == 0 ? Photon::Signal : Photon::Idler, guard);
    case GateKind::CondFreqFreq:
      return cond_freq_freq(jsa);
    case GateKind::FreqBeamSplitter:
      return freq_beam_splitter(jsa, guard);
    default:
      break;
  }
  if (gate.target != 0 && gate.target != 1) throw Error("target must be 0 or 1");
  const Photon photon = gate.target == 0 ? Photon::Signal : Photon::Idler;
  return apply_local(jsa, photon, local_kernel(gate), is_diagonal(gate.kind) ? Guard::Skip : guard);
}

SpectralAmplitude apply_circuit(const SpectralAmplitude& psi, const Circuit& circuit, Guard guard) {
  return run_gates(psi, circuit, [guard](const SpectralAmplitude& s, const GateDescriptor& g) {
    return apply_gate(s, g, guard);
  });
}

JointSpectralAmplitude apply_circuit(const JointSpectralAmplitude& jsa, const Circuit& circuit, Guard guard) {
  return run_gates(jsa, circuit, [guard](const JointSpectralAmplitude& s, const GateDescriptor& g) {
    return apply_gate(s, g, guard);
  });
}

}  // namespace tfcv
