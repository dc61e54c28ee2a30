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

#include "lcnns/circuit.hpp"

#include <algorithm>

#include "lcnns/error.hpp"
#include "lcnns/rng.hpp"

namespace lcnns {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
      return "cx";
    case GateKind::H:
      return "h";
    case GateKind::X:
      return "x";
    case GateKind::Z:
      return "z";
    case GateKind::Measure:
      return "measure";
  }
  return "?";
}

Circuit::Circuit(int num_qubits, int num_clbits)
    : num_qubits_(num_qubits), num_clbits_(num_clbits) {
  if (num_qubits < 0 || num_clbits < 0) {
    throw InputError("register sizes must be non-negative");
  }
}

void Circuit::add(const Gate& g) {
  auto in_range = [this](int q) { return q >= 0 && q < num_qubits_; };
  if (!in_range(g.a)) {
    throw InputError("qubit index " + std::to_string(g.a) + " out of range");
  }
  switch (g.kind) {
    case GateKind::CX:
      if (!in_range(g.b)) {
        throw InputError("qubit index " + std::to_string(g.b) + " out of range");
      }
      if (g.a == g.b) throw InputError("cx control and target must differ");
      break;
    case GateKind::Measure:
      if (g.b < 0 || g.b >= num_clbits_) {
        throw InputError("classical bit " + std::to_string(g.b) + " out of range");
      }
      break;
    default:
      break;
  }
  gates_.push_back(g);
}

bool Circuit::cnot_only() const {
  return std::all_of(gates_.begin(), gates_.end(),
                     [](const Gate& g) { return g.is_cnot(); });
}

std::vector<Cnot> Circuit::cnots() const {
  std::vector<Cnot> out;
  out.reserve(gates_.size());
  for (const auto& g : gates_) {
    if (!g.is_cnot()) {
      throw InputError("circuit contains a non-CNOT gate (" +
                       std::string(gate_name(g.kind)) + ")");
    }
    out.push_back(g.as_cnot());
  }
  return out;
}

std::size_t Circuit::cnot_count() const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_cnot(); }));
}

Circuit make_cnot_circuit(int num_qubits, std::span<const Cnot> gates) {
  Circuit c(num_qubits);
  for (const auto& g : gates) c.add_cnot(g.control, g.target);
  return c;
}

Circuit random_cnot_circuit(int n, std::size_t m, std::uint64_t seed) {
  if (n < 2) throw InputError("random_cnot_circuit: need at least 2 qubits");
  Circuit c(n);
  Rng rng(seed);
  const auto pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto idx = rng.uniform_index(pairs);
    const int control = static_cast<int>(idx / static_cast<std::uint64_t>(n - 1));
    int target = static_cast<int>(idx % static_cast<std::uint64_t>(n - 1));
    if (target >= control) ++target;
    c.add_cnot(control, target);
  }
  return c;
}

std::size_t depth(const Circuit& c) {
  std::vector<std::size_t> level(static_cast<std::size_t>(c.num_qubits()), 0);
  std::size_t deepest = 0;
  for (const auto& g : c.gates()) {
    const auto a = static_cast<std::size_t>(g.a);
    std::size_t layer = level[a];
    if (g.is_cnot()) layer = std::max(layer, level[static_cast<std::size_t>(g.b)]);
    ++layer;
    level[a] = layer;
    if (g.is_cnot()) level[static_cast<std::size_t>(g.b)] = layer;
    deepest = std::max(deepest, layer);
  }
  return deepest;
}

std::size_t depth(std::span<const Cnot> gates) {
  std::vector<std::size_t> level;
  std::size_t deepest = 0;
  for (const auto& g : gates) {
    const auto hi = static_cast<std::size_t>(std::max(g.control, g.target));
    if (level.size() <= hi) level.resize(hi + 1, 0);
    auto& lc = level[static_cast<std::size_t>(g.control)];
    auto& lt = level[static_cast<std::size_t>(g.target)];
    const std::size_t layer = std::max(lc, lt) + 1;
    lc = lt = layer;
    deepest = std::max(deepest, layer);
  }
  return deepest;
}

double esp(const Circuit& c, const CouplingGraph& g, double one_qubit_error) {
  double p = 1.0;
  for (const auto& gate : c.gates()) {
    switch (gate.kind) {
      case GateKind::CX:
        if (!g.has_edge(gate.a, gate.b)) {
          throw InputError("esp: cx q[" + std::to_string(gate.a) + "],q[" +
                           std::to_string(gate.b) + "] is not a coupling");
        }
        p *= 1.0 - g.error(gate.a, gate.b);
        break;
      case GateKind::H:
      case GateKind::X:
      case GateKind::Z:
        p *= 1.0 - one_qubit_error;
        break;
      case GateKind::Measure:
        break;
    }
  }
  return p;
}

double monte_carlo_fidelity(const Circuit& c, const CouplingGraph& g,
                            std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw InputError("monte_carlo_fidelity: shots must be >= 1");
  const std::vector<Cnot> gates = c.cnots();
  std::vector<double> error;
  error.reserve(gates.size());
  for (const auto& gate : gates) {
    if (!g.has_edge(gate.control, gate.target)) {
      throw InputError("monte_carlo_fidelity: cx q[" + std::to_string(gate.control) +
                       "],q[" + std::to_string(gate.target) + "] is not a coupling");
    }
    error.push_back(g.error(gate.control, gate.target));
  }

  std::vector<std::uint8_t> bits(static_cast<std::size_t>(c.num_qubits()));
  std::uint64_t zero_runs = 0;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    Rng rng = Rng::substream(seed, shot);
    std::fill(bits.begin(), bits.end(), 0);
    for (std::size_t k = 0; k < gates.size(); ++k) {
      auto& ctl = bits[static_cast<std::size_t>(gates[k].control)];
      auto& tgt = bits[static_cast<std::size_t>(gates[k].target)];
      tgt ^= ctl;
      if (rng.uniform01() < error[k]) {
        switch (rng.uniform_index(3)) {
          case 0:
            ctl ^= 1;
            break;
          case 1:
            tgt ^= 1;
            break;
          default:
            ctl ^= 1;
            tgt ^= 1;
            break;
        }
      }
    }
    if (std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b == 0; })) {
      ++zero_runs;
    }
  }
  return static_cast<double>(zero_runs) / static_cast<double>(shots);
}

FidelityReport fidelity_report(const Circuit& c, const CouplingGraph& g,
                               double one_qubit_error, std::uint64_t shots,
                               std::uint64_t seed) {
  FidelityReport r;
  r.esp = esp(c, g, one_qubit_error);
  r.shots = shots;
  r.seed = seed;
  if (shots > 0) r.mc_fidelity = monte_carlo_fidelity(c, g, shots, seed);
  return r;
}

}  // namespace lcnns
