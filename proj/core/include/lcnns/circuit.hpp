// Copyright 2026 The lcnns Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcnns/arch.hpp"
#include "lcnns/gf2.hpp"

namespace lcnns {

enum class GateKind { CX, H, X, Z, Measure };

std::string_view gate_name(GateKind kind);

/// One circuit operation. For CX, `a` is the control and `b` the target.
/// For single-qubit gates only `a` is used. Measure stores the classical
/// bit in `b`.
struct Gate {
  GateKind kind = GateKind::CX;
  int a = 0;
  int b = 0;

  static Gate cx(int control, int target) { return {GateKind::CX, control, target}; }
  static Gate h(int q) { return {GateKind::H, q, 0}; }
  static Gate x(int q) { return {GateKind::X, q, 0}; }
  static Gate z(int q) { return {GateKind::Z, q, 0}; }
  static Gate measure(int q, int clbit) { return {GateKind::Measure, q, clbit}; }

  bool is_cnot() const { return kind == GateKind::CX; }
  Cnot as_cnot() const { return {a, b}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits, int num_clbits = 0);

  int num_qubits() const { return num_qubits_; }
  int num_clbits() const { return num_clbits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Validates indices against the registers. Throws InputError.
  void add(const Gate& g);
  void add_cnot(int control, int target) { add(Gate::cx(control, target)); }

  bool cnot_only() const;
  /// CNOTs in order; throws InputError if another gate kind is present.
  std::vector<Cnot> cnots() const;
  std::size_t cnot_count() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_ = 0;
  int num_clbits_ = 0;
  std::vector<Gate> gates_;
};

/// Circuit from a CNOT list.
Circuit make_cnot_circuit(int num_qubits, std::span<const Cnot> gates);

/// OpenQASM 2.0 subset: one qreg, optional creg, cx/h/x/z/measure.
/// Throws ParseError with line and column.
Circuit parse_qasm(std::string_view text);
std::string write_qasm(const Circuit& c);

/// m CNOTs with (control, target) uniform over ordered distinct pairs.
Circuit random_cnot_circuit(int n, std::size_t m, std::uint64_t seed);

/// ASAP layering: each gate sits one layer above the latest gate on any of
/// its qubits. Measure occupies its qubit only.
std::size_t depth(const Circuit& c);
std::size_t depth(std::span<const Cnot> gates);

/// Estimated success probability: product of (1 - edge error) over CNOTs
/// and (1 - one_qubit_error) over H/X/Z. Throws InputError on a CNOT that
/// is not a coupling of g.
double esp(const Circuit& c, const CouplingGraph& g, double one_qubit_error);

/// Fraction of noisy classical runs from |0...0> that end in all zeros.
/// Each CNOT misfires with its edge error, flipping the control, the
/// target, or both with equal odds. Deterministic per seed; shot s draws
/// from its own substream.
double monte_carlo_fidelity(const Circuit& c, const CouplingGraph& g,
                            std::uint64_t shots, std::uint64_t seed);

struct FidelityReport {
  double esp = 1.0;
  std::optional<double> mc_fidelity;  // present iff shots > 0
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

/// ESP always; Monte-Carlo when shots > 0, which requires a CNOT-only
/// circuit.
FidelityReport fidelity_report(const Circuit& c, const CouplingGraph& g,
                               double one_qubit_error, std::uint64_t shots,
                               std::uint64_t seed);

}  // namespace lcnns
