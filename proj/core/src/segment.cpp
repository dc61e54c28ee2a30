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

#include "lcnns/segment.hpp"

#include "lcnns/error.hpp"

namespace lcnns {

SegmentedSynthesis segment_and_synthesize(const Circuit& c, Synthesizer& synth) {
  const CouplingGraph& g = synth.graph();
  const int n = c.num_qubits();
  if (n > g.num_vertices()) {
    throw InputError("circuit has " + std::to_string(n) + " qubits; " + g.name() +
                     " has " + std::to_string(g.num_vertices()));
  }
  SegmentedSynthesis out;
  out.circuit = Circuit(g.capacity(), c.num_clbits());
  if (n == 0) return out;
  out.mapping = synth.mapping_for(n);

  const auto& gates = c.gates();
  std::size_t i = 0;
  while (i < gates.size()) {
    if (!gates[i].is_cnot()) {
      Gate moved = gates[i];
      moved.a = out.mapping.physical(static_cast<std::size_t>(moved.a));
      out.circuit.add(moved);
      ++i;
      continue;
    }
    Segment seg;
    seg.first_gate = i;
    seg.matrix = ParityMatrix::identity(static_cast<std::size_t>(n));
    for (; i < gates.size() && gates[i].is_cnot(); ++i) seg.matrix.apply(gates[i].as_cnot());
    seg.gate_count = i - seg.first_gate;
    seg.result = lcnns(seg.matrix, g, out.mapping);
    for (const auto& cx : seg.result.gates) out.circuit.add_cnot(cx.control, cx.target);
    out.segments.push_back(std::move(seg));
  }
  return out;
}

SegmentedSynthesis segment_and_synthesize(const Circuit& c, const CouplingGraph& g,
                                          const TabuConfig& config) {
  Synthesizer synth(g, config);
  return segment_and_synthesize(c, synth);
}

}  // namespace lcnns
