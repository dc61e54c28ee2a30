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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lcnns/arch.hpp"
#include "lcnns/gf2.hpp"
#include "lcnns/mapping.hpp"

namespace lcnns {

/// Output of layer-convergence synthesis.
struct SynthesisResult {
  /// Final circuit on physical qubits: recorded_ops reversed, mapped by pi.
  std::vector<Cnot> gates;
  Mapping mapping;
  /// Row operations in elimination order, on logical indices.
  std::vector<Cnot> recorded_ops;
  std::size_t cnot_count = 0;
  std::size_t depth = 0;
};

/// Target-aided rows for layer `layer`: rows among order[layer+1..] whose
/// XOR equals row(order[layer]) ^ e_{order[layer]}. Solved as a GF(2)
/// linear system over the not-yet-eliminated rows and columns. Empty if
/// the row is already a unit vector. Returns ascending row indices.
///
/// Requires earlier layers to be eliminated and the current column to be a
/// unit vector; throws InvariantError when no subset exists.
std::vector<int> tarm(const ParityMatrix& m, std::size_t layer,
                      std::span<const int> order);

/// Exhaustive subset search with the same contract as tarm(). Test oracle;
/// refuses matrices larger than 10.
std::vector<int> tarm_bruteforce(const ParityMatrix& m, std::size_t layer,
                                 std::span<const int> order);

/// Clears column `layer` down to e_layer using a minimum-noise Steiner tree
/// over the hosts of the rows holding a 1, rooted at pi[layer]. Applies the
/// operations to `m` and returns them (logical indices). `residual` must
/// hold exactly the hosts of logical qubits layer..n-1.
std::vector<Cnot> eliminate_column(ParityMatrix& m, const CouplingGraph& residual,
                                   const Mapping& pi, std::size_t layer);

/// Clears row `layer` down to e_layer once its column is done, routing the
/// target-aided rows through a Steiner tree rooted at pi[layer].
std::vector<Cnot> eliminate_row(ParityMatrix& m, const CouplingGraph& residual,
                                const Mapping& pi, std::size_t layer);

/// Layer-convergence synthesis under a fixed mapping. Throws InputError
/// when m is singular, too large for g, or pi is unusable.
SynthesisResult lcnns(const ParityMatrix& m, const CouplingGraph& g,
                      const Mapping& pi);
/// Same, with the mapping found by kqpimo(g, m.size(), config).
SynthesisResult lcnns(const ParityMatrix& m, const CouplingGraph& g,
                      const TabuConfig& config);

/// Synthesis bound to one device and tabu configuration. The mapping
/// depends only on the qubit count, so it is computed once per count.
class Synthesizer {
 public:
  Synthesizer(CouplingGraph g, TabuConfig config);

  const CouplingGraph& graph() const { return graph_; }
  const TabuConfig& config() const { return config_; }
  const Mapping& mapping_for(int n);
  SynthesisResult run(const ParityMatrix& m);

 private:
  CouplingGraph graph_;
  TabuConfig config_;
  std::map<int, Mapping> mappings_;
};

struct Verification {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

/// Pulls result.gates back to logical indices and compares the rebuilt
/// parity matrix with `original`; also requires every gate to be a
/// coupling of g and gates == reverse(recorded_ops) under the mapping.
Verification verify_equivalence(const ParityMatrix& original,
                                const SynthesisResult& result,
                                const CouplingGraph& g);

}  // namespace lcnns
