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
#include <vector>

#include "lcnns/arch.hpp"
#include "lcnns/rng.hpp"

namespace lcnns {

/// Injective logical -> physical assignment. assign[m] hosts logical m.
///
/// Logical qubits are eliminated in index order and their physical host
/// is then deleted from the coupling graph, so a usable mapping must keep
/// the not-yet-eliminated hosts connected after every deletion.
struct Mapping {
  std::vector<int> assign;

  std::size_t size() const { return assign.size(); }
  int physical(std::size_t logical) const { return assign[logical]; }
  /// Logical qubit hosted on `physical`, if any.
  std::optional<int> logical_of(int physical) const;

  friend bool operator==(const Mapping&, const Mapping&) = default;
};

/// Empty string when `pi` is injective, uses vertices of `g`, and every
/// prefix removal leaves the remaining hosts connected. Otherwise a
/// description of the first violation.
std::string check_mapping(const CouplingGraph& g, const Mapping& pi);

struct TabuConfig {
  int tabu_len = 20;
  int iterations = 50;
  std::uint64_t seed = 0;
};

/// Key-qubit priority initial mapping.
///
/// Walks the residual graph: whenever it has a Hamiltonian path that covers
/// exactly the logical qubits still to place, they are laid along it;
/// otherwise the next logical qubit goes to ikey_list[0] (first step) or
/// to a random non-cut vertex of the residual graph, which is then removed.
///
/// For n < |V| a connected host set of n qubits containing ikey_list[0] is
/// carved out first by deleting random non-cut vertices, and the walk runs
/// on that set.
///
/// Throws InputError if g is disconnected, n is out of range, or ikey_list
/// is empty or names a cut vertex.
Mapping kqpim(const CouplingGraph& g, int n, std::span<const int> ikey_list,
              Rng& rng);

/// Pairwise connectivity in `sub`: 1 for adjacent qubits, 0 for
/// disconnected ones, otherwise the betweenness-weighted share of the
/// shortest i-j paths, clamped to [0, 1].
double connectivity_factor(const CouplingGraph& sub, int i, int j);

/// Mapping score, higher is better: product of pairwise connectivity
/// factors over the mapped subgraph minus the (m+1)-weighted mean incident
/// edge error of each host.
double objective(const CouplingGraph& g, const Mapping& pi);

struct TabuEntry {
  Mapping mapping;
  double score = 0.0;
};

struct TabuSearchResult {
  Mapping best;
  double best_score = 0.0;
  Mapping initial;
  double initial_score = 0.0;
  std::vector<TabuEntry> table;
};

/// Tabu search over key-qubit perturbations of kqpim. Deterministic in
/// (g, n, config); best_score >= initial_score always.
TabuSearchResult kqpimo_search(const CouplingGraph& g, int n,
                               const TabuConfig& config);

inline Mapping kqpimo(const CouplingGraph& g, int n, const TabuConfig& config) {
  return kqpimo_search(g, n, config).best;
}

}  // namespace lcnns
