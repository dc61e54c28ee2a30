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

#include "lcnns/arch.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "lcnns/error.hpp"

namespace lcnns {

CouplingGraph::CouplingGraph(int num_qubits, std::span<const Edge> edges,
                             std::string name)
    : present_(static_cast<std::size_t>(std::max(num_qubits, 0)), true),
      num_present_(std::max(num_qubits, 0)),
      name_(std::move(name)) {
  if (num_qubits < 1) throw InputError("coupling graph needs at least 1 qubit");
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= num_qubits || e.v >= num_qubits) {
      throw InputError("edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v) + " out of range");
    }
    if (e.u == e.v) {
      throw InputError("self-loop on qubit " + std::to_string(e.u));
    }
    if (!(e.error >= 0.0 && e.error < 1.0)) {
      throw InputError("error rate of edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v) + " outside [0,1)");
    }
    edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.error});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw InputError("duplicate edge " + std::to_string(edges_[i].u) + "-" +
                       std::to_string(edges_[i].v));
    }
  }
  index_edges();
}

void CouplingGraph::index_edges() {
  adjacency_.assign(present_.size(), {});
  for (const auto& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::vector<int> CouplingGraph::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(num_present_));
  for (int v = 0; v < capacity(); ++v) {
    if (present_[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

bool CouplingGraph::has_edge(int a, int b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  const auto& adj = neighbors(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

double CouplingGraph::error(int a, int b) const {
  const int u = std::min(a, b);
  const int v = std::max(a, b);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::pair(u, v),
      [](const Edge& e, const std::pair<int, int>& key) {
        return std::pair(e.u, e.v) < key;
      });
  if (it == edges_.end() || it->u != u || it->v != v) {
    throw InputError("no coupling between qubits " + std::to_string(a) +
                     " and " + std::to_string(b));
  }
  return it->error;
}

bool CouplingGraph::is_connected() const {
  if (num_present_ == 0) return true;
  std::vector<bool> seen(present_.size(), false);
  std::vector<int> stack;
  for (int v = 0; v < capacity(); ++v) {
    if (present_[static_cast<std::size_t>(v)]) {
      stack.push_back(v);
      seen[static_cast<std::size_t>(v)] = true;
      break;
    }
  }
  int reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return reached == num_present_;
}

CouplingGraph CouplingGraph::remove_vertex(int v) const {
  if (!has_vertex(v)) {
    throw InputError("remove_vertex: qubit " + std::to_string(v) +
                     " not in graph");
  }
  CouplingGraph out = *this;
  out.present_[static_cast<std::size_t>(v)] = false;
  --out.num_present_;
  std::erase_if(out.edges_, [v](const Edge& e) { return e.u == v || e.v == v; });
  out.index_edges();
  return out;
}

CouplingGraph CouplingGraph::induced(std::span<const int> keep) const {
  CouplingGraph out = *this;
  out.present_.assign(present_.size(), false);
  out.num_present_ = 0;
  for (int v : keep) {
    if (!has_vertex(v)) {
      throw InputError("induced: qubit " + std::to_string(v) + " not in graph");
    }
    if (!out.present_[static_cast<std::size_t>(v)]) {
      out.present_[static_cast<std::size_t>(v)] = true;
      ++out.num_present_;
    }
  }
  std::erase_if(out.edges_, [&out](const Edge& e) {
    return !out.present_[static_cast<std::size_t>(e.u)] ||
           !out.present_[static_cast<std::size_t>(e.v)];
  });
  out.index_edges();
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

CouplingGraph parse_arch(std::string_view text) {
  int num_qubits = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (num_qubits < 0) {
      if (tok[0] != "qubits" || tok.size() != 2 ||
          !parse_number(tok[1], num_qubits) || num_qubits < 1) {
        throw ParseError("expected 'qubits N' with N >= 1", line_no);
      }
      continue;
    }
    if (tok[0] != "edge") {
      throw ParseError("unknown directive '" + std::string(tok[0]) + "'", line_no);
    }
    if (tok.size() != 4) {
      throw ParseError("expected 'edge U V ERR'", line_no);
    }
    Edge e;
    if (!parse_number(tok[1], e.u) || !parse_number(tok[2], e.v)) {
      throw ParseError("edge endpoints must be integers", line_no);
    }
    if (!parse_number(tok[3], e.error)) {
      throw ParseError("edge error rate must be a decimal number", line_no);
    }
    if (e.u < 0 || e.v < 0 || e.u >= num_qubits || e.v >= num_qubits) {
      throw ParseError("edge endpoint out of range", line_no);
    }
    if (!(e.error >= 0.0 && e.error < 1.0)) {
      throw ParseError("error rate outside [0,1)", line_no);
    }
    edges.push_back(e);
  }
  if (num_qubits < 0) throw ParseError("missing 'qubits N' header", line_no);
  try {
    return CouplingGraph(num_qubits, edges);
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what(), line_no);
  }
}

std::string write_arch(const CouplingGraph& g) {
  if (g.num_vertices() != g.capacity()) {
    throw InputError("write_arch: graph has removed vertices");
  }
  std::string out = "qubits " + std::to_string(g.capacity()) + "\n";
  char buf[64];
  for (const auto& e : g.edges()) {
    auto res = std::to_chars(buf, buf + sizeof buf, e.error,
                             std::chars_format::scientific);
    out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           std::string(buf, res.ptr) + "\n";
  }
  return out;
}

CouplingGraph load_arch_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open architecture file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  CouplingGraph g = parse_arch(ss.str());
  g.set_name(path);
  return g;
}

// ---------------------------------------------------------------------------
// Graph algorithms

std::vector<int> articulation_points(const CouplingGraph& g) {
  if (!g.is_connected()) {
    throw InputError("articulation_points: graph is disconnected");
  }
  const auto n = static_cast<std::size_t>(g.capacity());
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<bool> cut(n, false);
  int timer = 0;

  // Iterative DFS; frame = (vertex, next neighbor index).
  for (int root : g.vertices()) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    int root_children = 0;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& adj = g.neighbors(v);
      if (next < adj.size()) {
        const int w = adj[next++];
        const auto wi = static_cast<std::size_t>(w);
        if (disc[wi] < 0) {
          parent[wi] = v;
          disc[wi] = low[wi] = timer++;
          if (v == root) ++root_children;
          stack.emplace_back(w, 0);
        } else if (w != parent[static_cast<std::size_t>(v)]) {
          low[static_cast<std::size_t>(v)] =
              std::min(low[static_cast<std::size_t>(v)], disc[wi]);
        }
      } else {
        const int done = v;
        stack.pop_back();
        const int p = parent[static_cast<std::size_t>(done)];
        if (p >= 0) {
          const auto pi = static_cast<std::size_t>(p);
          low[pi] = std::min(low[pi], low[static_cast<std::size_t>(done)]);
          if (p != root && low[static_cast<std::size_t>(done)] >= disc[pi]) {
            cut[pi] = true;
          }
        }
      }
    }
    if (root_children > 1) cut[static_cast<std::size_t>(root)] = true;
  }

  std::vector<int> out;
  for (int v : g.vertices()) {
    if (cut[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::vector<int> key_qubits(const CouplingGraph& g) {
  const auto cuts = articulation_points(g);
  std::vector<int> out;
  for (int v : g.vertices()) {
    if (!std::binary_search(cuts.begin(), cuts.end(), v)) out.push_back(v);
  }
  return out;
}

namespace {

// Backtracking over vertex bitmasks; ids are compacted to [0, k).
class HamiltonianSearch {
 public:
  explicit HamiltonianSearch(const CouplingGraph& g) : ids_(g.vertices()) {
    const std::size_t k = ids_.size();
    std::vector<int> local(static_cast<std::size_t>(g.capacity()), -1);
    for (std::size_t i = 0; i < k; ++i) local[static_cast<std::size_t>(ids_[i])] = static_cast<int>(i);
    adj_.assign(k, 0);
    nbrs_.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
      for (int w : g.neighbors(ids_[i])) {
        const int j = local[static_cast<std::size_t>(w)];
        adj_[i] |= std::uint64_t{1} << j;
        nbrs_[i].push_back(j);
      }
    }
    full_ = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  }

  std::optional<std::vector<int>> run() {
    const std::size_t k = ids_.size();
    if (k == 0) return std::vector<int>{};
    // A path has at most two endpoints, so more than two vertices of
    // degree <= 1 rule it out immediately.
    int low_degree = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (k > 1 && adj_[i] == 0) return std::nullopt;
      if (std::popcount(adj_[i]) <= 1) ++low_degree;
    }
    if (k > 1 && low_degree > 2) return std::nullopt;
    if (!connected(full_)) return std::nullopt;

    for (std::size_t s = 0; s < k; ++s) {
      path_.assign(1, static_cast<int>(s));
      if (extend(std::uint64_t{1} << s)) {
        std::vector<int> out;
        out.reserve(k);
        for (int i : path_) out.push_back(ids_[static_cast<std::size_t>(i)]);
        return out;
      }
    }
    return std::nullopt;
  }

 private:
  bool connected(std::uint64_t mask) const {
    if (mask == 0) return true;
    std::uint64_t seen = mask & (~mask + 1);
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint64_t fresh = adj_[static_cast<std::size_t>(v)] & mask & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
    return seen == mask;
  }

  bool extend(std::uint64_t visited) {
    if (visited == full_) return true;
    const int last = path_.back();
    const std::uint64_t rest = full_ & ~visited;
    // The unvisited vertices must stay reachable as one block from `last`.
    if ((adj_[static_cast<std::size_t>(last)] & rest) == 0) return false;
    if (!connected(rest)) return false;
    for (int w : nbrs_[static_cast<std::size_t>(last)]) {
      const std::uint64_t bit = std::uint64_t{1} << w;
      if (visited & bit) continue;
      path_.push_back(w);
      if (extend(visited | bit)) return true;
      path_.pop_back();
    }
    return false;
  }

  std::vector<int> ids_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::uint64_t full_ = 0;
  std::vector<int> path_;
};

}  // namespace

std::optional<std::vector<int>> has_hamiltonian_path(const CouplingGraph& g) {
  if (g.num_vertices() > kMaxHamiltonianVertices) {
    throw InputError("has_hamiltonian_path: more than " +
                     std::to_string(kMaxHamiltonianVertices) + " vertices");
  }
  return HamiltonianSearch(g).run();
}

}  // namespace lcnns
