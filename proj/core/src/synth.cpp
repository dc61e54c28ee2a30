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

#include "lcnns/synth.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lcnns/circuit.hpp"
#include "lcnns/error.hpp"
#include "lcnns/steiner.hpp"

namespace lcnns {
namespace {

void require_order(const ParityMatrix& m, std::size_t layer,
                   std::span<const int> order) {
  const std::size_t n = m.size();
  if (order.size() != n) throw InputError("tarm: order must list every row");
  if (layer >= n) throw InputError("tarm: layer out of range");
  std::vector<bool> seen(n, false);
  for (int r : order) {
    if (r < 0 || static_cast<std::size_t>(r) >= n || seen[static_cast<std::size_t>(r)]) {
      throw InputError("tarm: order is not a permutation");
    }
    seen[static_cast<std::size_t>(r)] = true;
  }
}

// row(order[layer]) ^ e_{order[layer]}, checked to live on the open columns.
BitVector tarm_target(const ParityMatrix& m, std::size_t layer,
                      std::span<const int> order) {
  const auto r = static_cast<std::size_t>(order[layer]);
  BitVector target = m.row(r) ^ BitVector::unit(m.size(), r);
  for (std::size_t l = 0; l <= layer; ++l) {
    if (target.test(static_cast<std::size_t>(order[l]))) {
      throw InvariantError("tarm: row " + std::to_string(r) +
                           " has a 1 in an eliminated column");
    }
  }
  return target;
}

BitVector xor_rows(const ParityMatrix& m, std::span<const int> rows) {
  BitVector acc(m.size());
  for (int k : rows) acc ^= m.row(static_cast<std::size_t>(k));
  return acc;
}

// Physical id -> logical index under pi, -1 where unmapped.
std::vector<int> inverse(const Mapping& pi, int capacity) {
  std::vector<int> inv(static_cast<std::size_t>(capacity), -1);
  for (std::size_t m = 0; m < pi.size(); ++m) {
    inv[static_cast<std::size_t>(pi.assign[m])] = static_cast<int>(m);
  }
  return inv;
}

// Records and applies row(target) ^= row(control) on logical indices.
class OpLog {
 public:
  OpLog(ParityMatrix& m, const std::vector<int>& logical) : m_(m), logical_(logical) {}

  void apply_physical(int control, int target) {
    const int c = logical_[static_cast<std::size_t>(control)];
    const int t = logical_[static_cast<std::size_t>(target)];
    if (c < 0 || t < 0) throw InvariantError("tree vertex hosts no logical qubit");
    m_.row_xor(static_cast<std::size_t>(c), static_cast<std::size_t>(t));
    ops_.push_back({c, t});
  }
  bool bit(int physical, std::size_t col) const {
    return m_.get(static_cast<std::size_t>(logical_[static_cast<std::size_t>(physical)]), col);
  }
  std::vector<Cnot> take() { return std::move(ops_); }

 private:
  ParityMatrix& m_;
  const std::vector<int>& logical_;
  std::vector<Cnot> ops_;
};

bool column_is_unit(const ParityMatrix& m, std::size_t col) {
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m.get(r, col) != (r == col)) return false;
  }
  return true;
}

void require_residual(const CouplingGraph& residual, const Mapping& pi,
                      std::size_t layer) {
  for (std::size_t j = layer; j < pi.size(); ++j) {
    if (!residual.has_vertex(pi.assign[j])) {
      throw InvariantError("host of logical " + std::to_string(j) +
                           " missing from residual graph");
    }
  }
}

}  // namespace

std::vector<int> tarm(const ParityMatrix& m, std::size_t layer,
                      std::span<const int> order) {
  require_order(m, layer, order);
  const BitVector target = tarm_target(m, layer, order);
  if (!target.any()) return {};

  const std::span<const int> open = order.subspan(layer + 1);
  if (open.empty()) throw InvariantError("tarm: no rows left to match");
  std::vector<BitVector> rows;
  rows.reserve(open.size());
  for (int k : open) {
    BitVector restricted(open.size());
    for (std::size_t j = 0; j < open.size(); ++j) {
      restricted.set(j, m.get(static_cast<std::size_t>(k), static_cast<std::size_t>(open[j])));
    }
    rows.push_back(std::move(restricted));
  }
  BitVector y(open.size());
  for (std::size_t j = 0; j < open.size(); ++j) {
    y.set(j, target.test(static_cast<std::size_t>(open[j])));
  }

  const auto x = solve_gf2(rows, y);
  if (!x) throw InvariantError("tarm: no target-aided row set exists");
  std::vector<int> picked;
  for (std::size_t j = 0; j < open.size(); ++j) {
    if (x->test(j)) picked.push_back(open[j]);
  }
  std::sort(picked.begin(), picked.end());
  if (xor_rows(m, picked) != target) {
    throw InvariantError("tarm: open rows are not clear on eliminated columns");
  }
  return picked;
}

std::vector<int> tarm_bruteforce(const ParityMatrix& m, std::size_t layer,
                                 std::span<const int> order) {
  if (m.size() > 10) throw InputError("tarm_bruteforce: matrix larger than 10");
  require_order(m, layer, order);
  const BitVector target = tarm_target(m, layer, order);
  if (!target.any()) return {};

  const std::vector<int> open(order.begin() + static_cast<std::ptrdiff_t>(layer) + 1,
                              order.end());
  // Subsets by size, each size in lexicographic order of positions.
  for (std::size_t size = 1; size <= open.size(); ++size) {
    std::vector<bool> choose(open.size(), false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<int> subset;
      for (std::size_t j = 0; j < open.size(); ++j) {
        if (choose[j]) subset.push_back(open[j]);
      }
      if (xor_rows(m, subset) == target) {
        std::sort(subset.begin(), subset.end());
        return subset;
      }
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  throw InvariantError("tarm_bruteforce: no target-aided row set exists");
}

std::vector<Cnot> eliminate_column(ParityMatrix& m, const CouplingGraph& residual,
                                   const Mapping& pi, std::size_t layer) {
  const std::size_t col = layer;
  require_residual(residual, pi, layer);
  for (std::size_t j = 0; j < layer; ++j) {
    if (m.get(j, col)) {
      throw InvariantError("eliminate_column: finished row " + std::to_string(j) +
                           " has a 1 in column " + std::to_string(col));
    }
  }
  std::vector<int> terminals;
  for (std::size_t j = layer; j < m.size(); ++j) {
    if (m.get(j, col)) terminals.push_back(pi.assign[j]);
  }
  if (terminals.empty()) throw InvariantError("eliminate_column: column is zero");
  if (column_is_unit(m, col)) return {};

  const std::vector<int> logical = inverse(pi, residual.capacity());
  const SteinerTree tree = mnst(residual, pi.assign[layer], terminals);
  const std::vector<int> order = postorder(tree);
  OpLog log(m, logical);

  // Fill zero Steiner points (and a zero root) from a child holding a 1.
  for (int c : order) {
    if (c == tree.root) continue;
    const int k = tree.parent.at(c);
    if (!log.bit(k, col) && log.bit(c, col)) log.apply_physical(c, k);
  }
  // Every tree row now has a 1; clear all but the root top-down.
  for (int c : order) {
    for (int l : tree.children(c)) log.apply_physical(c, l);
  }

  if (!column_is_unit(m, col)) {
    throw InvariantError("eliminate_column: column " + std::to_string(col) +
                         " not reduced to a unit vector");
  }
  return log.take();
}

std::vector<Cnot> eliminate_row(ParityMatrix& m, const CouplingGraph& residual,
                                const Mapping& pi, std::size_t layer) {
  require_residual(residual, pi, layer);
  if (!column_is_unit(m, layer)) {
    throw InvariantError("eliminate_row: column " + std::to_string(layer) +
                         " must be eliminated first");
  }
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  const std::vector<int> aided = tarm(m, layer, order);
  if (aided.empty()) return {};

  std::vector<int> terminals{pi.assign[layer]};
  for (int k : aided) terminals.push_back(pi.assign[static_cast<std::size_t>(k)]);
  const std::vector<int> logical = inverse(pi, residual.capacity());
  const SteinerTree tree = mnst(residual, pi.assign[layer], terminals);
  auto is_aided = [&](int physical) {
    return std::binary_search(aided.begin(), aided.end(),
                              logical[static_cast<std::size_t>(physical)]);
  };
  OpLog log(m, logical);

  // Fold non-aided rows into their parents, then sweep bottom-up.
  for (int r : preorder(tree)) {
    if (r == tree.root || is_aided(r)) continue;
    log.apply_physical(r, tree.parent.at(r));
  }
  for (int r : postorder(tree)) {
    if (r == tree.root) continue;
    log.apply_physical(r, tree.parent.at(r));
  }

  if (m.row(layer) != BitVector::unit(m.size(), layer) || !column_is_unit(m, layer)) {
    throw InvariantError("eliminate_row: row " + std::to_string(layer) +
                         " not reduced to a unit vector");
  }
  return log.take();
}

SynthesisResult lcnns(const ParityMatrix& m, const CouplingGraph& g,
                      const Mapping& pi) {
  const std::size_t n = m.size();
  if (n == 0) throw InputError("lcnns: empty matrix");
  if (!m.is_invertible()) throw InputError("lcnns: parity matrix is singular");
  if (static_cast<int>(n) > g.num_vertices()) {
    throw InputError("lcnns: " + std::to_string(n) + " qubits do not fit on " +
                     std::to_string(g.num_vertices()) + " physical qubits");
  }
  if (!g.is_connected()) throw InputError("lcnns: coupling graph is disconnected");
  if (pi.size() != n) throw InputError("lcnns: mapping size differs from matrix");
  if (auto why = check_mapping(g, pi); !why.empty()) {
    throw InputError("lcnns: unusable mapping: " + why);
  }

  SynthesisResult result;
  result.mapping = pi;
  ParityMatrix work = m;
  for (std::size_t i = 0; i < n; ++i) {
    const std::span<const int> hosts(pi.assign.data() + i, n - i);
    const CouplingGraph residual = g.induced(hosts);
    for (auto& op : eliminate_column(work, residual, pi, i)) result.recorded_ops.push_back(op);
    for (auto& op : eliminate_row(work, residual, pi, i)) result.recorded_ops.push_back(op);
  }
  if (!work.is_identity()) throw InvariantError("lcnns: matrix not reduced to identity");

  result.gates.reserve(result.recorded_ops.size());
  for (auto it = result.recorded_ops.rbegin(); it != result.recorded_ops.rend(); ++it) {
    result.gates.push_back({pi.physical(static_cast<std::size_t>(it->control)),
                            pi.physical(static_cast<std::size_t>(it->target))});
  }
  result.cnot_count = result.gates.size();
  result.depth = depth(result.gates);
  return result;
}

SynthesisResult lcnns(const ParityMatrix& m, const CouplingGraph& g,
                      const TabuConfig& config) {
  if (m.size() == 0) throw InputError("lcnns: empty matrix");
  return lcnns(m, g, kqpimo(g, static_cast<int>(m.size()), config));
}

Synthesizer::Synthesizer(CouplingGraph g, TabuConfig config)
    : graph_(std::move(g)), config_(config) {
  if (!graph_.is_connected()) {
    throw InputError("coupling graph '" + graph_.name() + "' is disconnected");
  }
}

const Mapping& Synthesizer::mapping_for(int n) {
  auto it = mappings_.find(n);
  if (it == mappings_.end()) it = mappings_.emplace(n, kqpimo(graph_, n, config_)).first;
  return it->second;
}

SynthesisResult Synthesizer::run(const ParityMatrix& m) {
  if (m.size() == 0) throw InputError("lcnns: empty matrix");
  return lcnns(m, graph_, mapping_for(static_cast<int>(m.size())));
}

Verification verify_equivalence(const ParityMatrix& original,
                                const SynthesisResult& result,
                                const CouplingGraph& g) {
  const std::size_t n = original.size();
  if (result.mapping.size() != n) {
    return {false, "mapping covers " + std::to_string(result.mapping.size()) +
                       " qubits, matrix has " + std::to_string(n)};
  }
  std::vector<int> logical(static_cast<std::size_t>(g.capacity()), -1);
  for (std::size_t q = 0; q < n; ++q) {
    const int p = result.mapping.assign[q];
    if (!g.has_vertex(p)) return {false, "mapping uses absent qubit " + std::to_string(p)};
    logical[static_cast<std::size_t>(p)] = static_cast<int>(q);
  }

  std::vector<Cnot> pulled;
  pulled.reserve(result.gates.size());
  for (std::size_t k = 0; k < result.gates.size(); ++k) {
    const Cnot& gate = result.gates[k];
    std::ostringstream where;
    where << "gate " << k << " " << gate;
    if (!g.has_edge(gate.control, gate.target)) {
      return {false, where.str() + " is not a coupling"};
    }
    const int c = logical[static_cast<std::size_t>(gate.control)];
    const int t = logical[static_cast<std::size_t>(gate.target)];
    if (c < 0 || t < 0) return {false, where.str() + " touches an unmapped qubit"};
    pulled.push_back({c, t});
  }

  if (result.recorded_ops.size() != pulled.size() ||
      !std::equal(pulled.begin(), pulled.end(), result.recorded_ops.rbegin())) {
    return {false, "gates are not the reversed row-operation log"};
  }

  const ParityMatrix rebuilt = from_circuit(pulled, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rebuilt.row(r) != original.row(r)) {
      return {false, "row " + std::to_string(r) + " differs: expected " +
                         original.row(r).to_string() + ", got " +
                         rebuilt.row(r).to_string()};
    }
  }
  return {true, {}};
}

}  // namespace lcnns
