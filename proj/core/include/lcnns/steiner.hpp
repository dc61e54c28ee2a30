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

namespace lcnns {

/// Product of (1 - error) over consecutive pairs. 1 for paths of length
/// 0 or 1. Throws InputError if a consecutive pair is not an edge.
double path_fidelity(const CouplingGraph& g, std::span<const int> path);

/// Additive Dijkstra weight of an edge: -ln(1 - error).
double noise_weight(double error);

/// Most reliable s -> t path: minimum total noise_weight, ties broken by
/// fewer hops, then by the lexicographically smallest vertex sequence.
/// Throws InputError if s and t are not connected.
std::vector<int> best_path(const CouplingGraph& g, int s, int t);

/// Tree over physical qubits, rooted, stored as child -> parent links.
struct SteinerTree {
  int root = 0;
  std::map<int, int> parent;
  std::vector<int> terminals;  // ascending
  std::vector<int> vertices;   // ascending, includes root

  bool contains(int v) const;
  bool is_terminal(int v) const;
  /// Children of v, ascending.
  std::vector<int> children(int v) const;
  /// Empty when the structural invariants hold against g, otherwise a
  /// description of the first problem.
  std::string check(const CouplingGraph& g) const;
};

/// Minimum-noise Steiner tree: starting from {root}, terminals are joined
/// in ascending id order, each through the most reliable path from any
/// vertex already in the tree.
SteinerTree mnst(const CouplingGraph& g, int root, std::span<const int> terminals);

/// Depth-first orders from the root, children in ascending id order.
std::vector<int> preorder(const SteinerTree& t);
std::vector<int> postorder(const SteinerTree& t);

}  // namespace lcnns
