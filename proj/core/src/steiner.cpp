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

#include "lcnns/steiner.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "lcnns/error.hpp"

namespace lcnns {

double noise_weight(double error) { return -std::log1p(-error); }

double path_fidelity(const CouplingGraph& g, std::span<const int> path) {
  double f = 1.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.has_edge(path[i - 1], path[i])) {
      throw InputError("path_fidelity: qubits " + std::to_string(path[i - 1]) +
                       " and " + std::to_string(path[i]) + " are not coupled");
    }
    f *= 1.0 - g.error(path[i - 1], path[i]);
  }
  return f;
}

namespace {

struct Label {
  double cost = 0.0;
  std::size_t hops = 0;
  std::vector<int> path;
};

bool better(const Label& a, const Label& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.hops != b.hops) return a.hops < b.hops;
  return a.path < b.path;
}

// Dijkstra from a set of sources to `target` under (cost, hops, sequence)
// ordering. Sub-paths of a best path are themselves best, so finalizing
// labels greedily is exact. Dense O(V^2) selection; graphs here are small.
std::optional<std::vector<int>> cheapest_path(const CouplingGraph& g,
                                              std::span<const int> sources,
                                              int target) {
  const auto cap = static_cast<std::size_t>(g.capacity());
  std::vector<std::optional<Label>> label(cap);
  std::vector<bool> done(cap, false);
  for (int s : sources) label[static_cast<std::size_t>(s)] = Label{0.0, 0, {s}};

  while (true) {
    std::optional<std::size_t> pick;
    for (std::size_t v = 0; v < cap; ++v) {
      if (done[v] || !label[v]) continue;
      if (!pick || better(*label[v], *label[*pick])) pick = v;
    }
    if (!pick) return std::nullopt;
    const std::size_t v = *pick;
    done[v] = true;
    if (static_cast<int>(v) == target) return label[v]->path;

    for (int w : g.neighbors(static_cast<int>(v))) {
      const auto wi = static_cast<std::size_t>(w);
      if (done[wi]) continue;
      Label next{label[v]->cost + noise_weight(g.error(static_cast<int>(v), w)),
                 label[v]->hops + 1, label[v]->path};
      next.path.push_back(w);
      if (!label[wi] || better(next, *label[wi])) label[wi] = std::move(next);
    }
  }
}

}  // namespace

std::vector<int> best_path(const CouplingGraph& g, int s, int t) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) {
    throw InputError("best_path: endpoint not in graph");
  }
  const int src[] = {s};
  auto path = cheapest_path(g, src, t);
  if (!path) {
    throw InputError("best_path: qubits " + std::to_string(s) + " and " +
                     std::to_string(t) + " are disconnected");
  }
  return *path;
}

// ---------------------------------------------------------------------------
// SteinerTree

bool SteinerTree::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool SteinerTree::is_terminal(int v) const {
  return std::binary_search(terminals.begin(), terminals.end(), v);
}

std::vector<int> SteinerTree::children(int v) const {
  std::vector<int> out;
  for (const auto& [child, p] : parent) {
    if (p == v) out.push_back(child);
  }
  return out;  // std::map iterates keys ascending
}

std::string SteinerTree::check(const CouplingGraph& g) const {
  if (!contains(root)) return "root not among tree vertices";
  if (parent.count(root) != 0) return "root has a parent";
  if (parent.size() + 1 != vertices.size()) {
    return "parent links do not cover every non-root vertex";
  }
  for (int t : terminals) {
    if (!contains(t)) return "terminal " + std::to_string(t) + " missing";
  }
  for (const auto& [child, p] : parent) {
    if (!contains(child) || !contains(p)) return "link leaves the vertex set";
    if (!g.has_edge(child, p)) {
      return "tree edge " + std::to_string(p) + "-" + std::to_string(child) +
             " is not a coupling";
    }
  }
  for (int v : vertices) {
    int cur = v;
    std::size_t steps = 0;
    while (cur != root) {
      auto it = parent.find(cur);
      if (it == parent.end() || ++steps > vertices.size()) {
        return "vertex " + std::to_string(v) + " does not reach the root";
      }
      cur = it->second;
    }
    if (v != root && !is_terminal(v) && children(v).empty()) {
      return "leaf " + std::to_string(v) + " is not a terminal";
    }
  }
  return {};
}

SteinerTree mnst(const CouplingGraph& g, int root, std::span<const int> terminals) {
  if (!g.has_vertex(root)) throw InputError("mnst: root not in graph");
  if (terminals.empty()) throw InputError("mnst: no terminals");

  SteinerTree tree;
  tree.root = root;
  tree.terminals.assign(terminals.begin(), terminals.end());
  std::sort(tree.terminals.begin(), tree.terminals.end());
  tree.terminals.erase(std::unique(tree.terminals.begin(), tree.terminals.end()),
                       tree.terminals.end());
  tree.vertices = {root};

  for (int t : tree.terminals) {
    if (!g.has_vertex(t)) {
      throw InputError("mnst: terminal " + std::to_string(t) + " not in graph");
    }
    if (tree.contains(t)) continue;
    auto path = cheapest_path(g, tree.vertices, t);
    if (!path) {
      throw InputError("mnst: terminal " + std::to_string(t) + " unreachable");
    }
    for (std::size_t k = 1; k < path->size(); ++k) {
      tree.parent[(*path)[k]] = (*path)[k - 1];
      tree.vertices.push_back((*path)[k]);
    }
    std::sort(tree.vertices.begin(), tree.vertices.end());
  }
  return tree;
}

namespace {

void walk(const SteinerTree& t, int v, std::vector<int>& pre, std::vector<int>& post) {
  pre.push_back(v);
  for (int c : t.children(v)) walk(t, c, pre, post);
  post.push_back(v);
}

}  // namespace

std::vector<int> preorder(const SteinerTree& t) {
  std::vector<int> pre, post;
  walk(t, t.root, pre, post);
  return pre;
}

std::vector<int> postorder(const SteinerTree& t) {
  std::vector<int> pre, post;
  walk(t, t.root, pre, post);
  return post;
}

}  // namespace lcnns
