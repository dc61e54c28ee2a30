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

#include <cstddef>
#include <vector>

#include "lcnns/arch.hpp"
#include "lcnns/circuit.hpp"
#include "lcnns/gf2.hpp"
#include "lcnns/mapping.hpp"
#include "lcnns/synth.hpp"

namespace lcnns {

/// One maximal CNOT run of the input and its synthesis.
struct Segment {
  std::size_t first_gate = 0;  // index of the run's first gate in the input
  std::size_t gate_count = 0;
  ParityMatrix matrix;         // parity map of the run, logical indices
  SynthesisResult result;
};

struct SegmentedSynthesis {
  /// Output on physical qubits; g.capacity() qubits, input classical bits.
  Circuit circuit;
  Mapping mapping;
  std::vector<Segment> segments;
};

/// Synthesizes every maximal CNOT run under one shared mapping and moves
/// single-qubit gates and measurements onto their hosts, keeping run order.
SegmentedSynthesis segment_and_synthesize(const Circuit& c, Synthesizer& synth);
SegmentedSynthesis segment_and_synthesize(const Circuit& c, const CouplingGraph& g,
                                          const TabuConfig& config);

}  // namespace lcnns
