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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcnns {

/// Undirected coupling edge with its CNOT error rate. Stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  double error = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected physical-qubit graph with per-edge CNOT error rates.
///
/// Vertex ids are physical qubit ids in [0, capacity()). Removing a vertex
/// keeps the ids of the others stable, so a residual graph can still be
/// indexed by the original physical qubits. Values are immutable once
/// built; all "modifying" operations return a new graph.
class CouplingGraph {
 public:
  CouplingGraph() = default;

  /// Validates: ids in range, no self-loops, no duplicate edges,
  /// 0 <= error < 1. Throws InputError otherwise.
  CouplingGraph(int num_qubits, std::span<const Edge> edges,
                std::string name = {});

  /// Number of vertex ids, including removed ones.
  int capacity() const { return static_cast<int>(present_.size()); }
  /// Number of vertices still present.
  int num_vertices() const { return num_present_; }
  bool has_vertex(int v) const {
    return v >= 0 && v < capacity() && present_[static_cast<std::size_t>(v)];
  }
  /// Present vertex ids, ascending.
  std::vector<int> vertices() const;

  /// Edges sorted by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int a, int b) const;
  /// Error rate of edge {a, b}; throws InputError if absent.
  double error(int a, int b) const;
  /// Neighbors of v, ascending.
  const std::vector<int>& neighbors(int v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool is_connected() const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Single-qubit gate error used by the ESP report when no override is
  /// given. Not part of the file format and not compared by operator==.
  double one_qubit_error() const { return one_qubit_error_; }
  void set_one_qubit_error(double e) { one_qubit_error_ = e; }

  /// Graph without v and its incident edges. Throws if v is absent.
  CouplingGraph remove_vertex(int v) const;
  /// Subgraph induced by `keep` (ids must be present).
  CouplingGraph induced(std::span<const int> keep) const;

  /// Same vertex set and same weighted edges.
  friend bool operator==(const CouplingGraph& a, const CouplingGraph& b) {
    return a.present_ == b.present_ && a.edges_ == b.edges_;
  }

 private:
  void index_edges();

  std::vector<bool> present_;
  int num_present_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::string name_;
  double one_qubit_error_ = 0.0;
};

/// Parses the text architecture format:
///
///     qubits N
///     edge U V ERR
///     ...
///
/// '#' starts a comment. Throws ParseError with the offending line.
CouplingGraph parse_arch(std::string_view text);
/// Writes `qubits N` followed by edges sorted by endpoint, errors in
/// shortest round-trip scientific notation. Only present vertices are
/// meaningful, so removed-vertex graphs are rejected.
std::string write_arch(const CouplingGraph& g);
CouplingGraph load_arch_file(const std::string& path);

/// Built-in devices: quito, guadalupe, manila, wuyuan2, scq10, tokyo,
/// linear(n), grid(r,c). Throws InputError for anything else.
CouplingGraph builtin(std::string_view name);
/// Names accepted by builtin() without parameters.
std::vector<std::string> builtin_names();
/// builtin() if `name_or_path` names a built-in, otherwise reads it as a file path.
CouplingGraph resolve_arch(const std::string& name_or_path);

/// Vertices whose removal disconnects their component (Tarjan lowlink).
/// Throws InputError on a disconnected graph.
std::vector<int> articulation_points(const CouplingGraph& g);
/// Non-cut vertices, ascending.
std::vector<int> key_qubits(const CouplingGraph& g);

/// Largest graph has_hamiltonian_path() will search.
inline constexpr int kMaxHamiltonianVertices = 32;

/// Exhaustive backtracking search. Start vertices and neighbors are tried
/// in ascending id order and the first complete path is returned.
std::optional<std::vector<int>> has_hamiltonian_path(const CouplingGraph& g);

}  // namespace lcnns
