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

#include "lcnns/mapping.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "lcnns/error.hpp"

namespace lcnns {

std::optional<int> Mapping::logical_of(int physical) const {
  for (std::size_t m = 0; m < assign.size(); ++m) {
    if (assign[m] == physical) return static_cast<int>(m);
  }
  return std::nullopt;
}

std::string check_mapping(const CouplingGraph& g, const Mapping& pi) {
  std::vector<bool> used(static_cast<std::size_t>(g.capacity()), false);
  for (std::size_t m = 0; m < pi.size(); ++m) {
    const int p = pi.assign[m];
    if (!g.has_vertex(p)) {
      return "logical " + std::to_string(m) + " mapped to absent qubit " +
             std::to_string(p);
    }
    if (used[static_cast<std::size_t>(p)]) {
      return "physical qubit " + std::to_string(p) + " used twice";
    }
    used[static_cast<std::size_t>(p)] = true;
  }
  for (std::size_t k = 0; k < pi.size(); ++k) {
    std::span<const int> rest(pi.assign.data() + k, pi.size() - k);
    if (!g.induced(rest).is_connected()) {
      return "hosts of logical " + std::to_string(k) + ".." +
             std::to_string(pi.size() - 1) + " are disconnected";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Initial mapping

namespace {

// True if the present vertices other than a and b form a connected graph.
bool connected_without(const CouplingGraph& g, int a, int b) {
  std::vector<char> seen(static_cast<std::size_t>(g.capacity()), 0);
  seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = 1;
  std::vector<int> stack;
  int remaining = g.num_vertices() - (a == b ? 1 : 2);
  for (int v : g.vertices()) {
    if (!seen[static_cast<std::size_t>(v)]) {
      stack.push_back(v);
      seen[static_cast<std::size_t>(v)] = 1;
      break;
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    --remaining;
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return remaining <= 0;
}

// Shrinks g to `target` vertices by deleting random non-cut vertices while
// keeping `anchor` present and non-cut.
CouplingGraph carve_host_set(CouplingGraph g, int target, int anchor, Rng& rng) {
  while (g.num_vertices() > target) {
    std::vector<int> candidates;
    for (int v : key_qubits(g)) {
      if (v == anchor) continue;
      if (g.num_vertices() > 2 && !connected_without(g, v, anchor)) continue;
      candidates.push_back(v);
    }
    if (candidates.empty()) {
      throw InvariantError("kqpim: no removable vertex while carving host set");
    }
    g = g.remove_vertex(candidates[rng.uniform_index(candidates.size())]);
  }
  return g;
}

}  // namespace

Mapping kqpim(const CouplingGraph& g, int n, std::span<const int> ikey_list,
              Rng& rng) {
  if (!g.is_connected()) throw InputError("kqpim: coupling graph is disconnected");
  if (n < 1 || n > g.num_vertices()) {
    throw InputError("kqpim: need 1 <= n <= " + std::to_string(g.num_vertices()) +
                     ", got " + std::to_string(n));
  }
  if (ikey_list.empty()) throw InputError("kqpim: empty key-qubit list");
  const auto keys = key_qubits(g);
  for (int k : ikey_list) {
    if (!std::binary_search(keys.begin(), keys.end(), k)) {
      throw InputError("kqpim: qubit " + std::to_string(k) +
                       " is not a key qubit (cut point or absent)");
    }
  }

  const int anchor = ikey_list.front();
  CouplingGraph residual =
      n < g.num_vertices() ? carve_host_set(g, n, anchor, rng) : g;

  Mapping pi;
  pi.assign.reserve(static_cast<std::size_t>(n));
  bool first = true;
  while (static_cast<int>(pi.size()) < n) {
    if (residual.num_vertices() <= kMaxHamiltonianVertices) {
      if (auto path = has_hamiltonian_path(residual)) {
        pi.assign.insert(pi.assign.end(), path->begin(), path->end());
        break;
      }
    }
    int next;
    if (first) {
      next = anchor;
    } else {
      const auto candidates = key_qubits(residual);
      if (candidates.empty()) {
        throw InvariantError("kqpim: residual graph has no non-cut vertex");
      }
      next = candidates[rng.uniform_index(candidates.size())];
    }
    first = false;
    pi.assign.push_back(next);
    residual = residual.remove_vertex(next);
  }
  return pi;
}

// ---------------------------------------------------------------------------
// Objective

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max();

// All-pairs hop distances and shortest-path counts over the present
// vertices of a graph, indexed by compact position.
struct ShortestPathTable {
  std::vector<int> ids;
  std::vector<int> pos;  // physical id -> compact index, -1 if absent
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<double>> sigma;
  /// Shortest paths between other pairs that pass through each vertex.
  std::vector<double> through;

  explicit ShortestPathTable(const CouplingGraph& g) : ids(g.vertices()) {
    const std::size_t k = ids.size();
    pos.assign(static_cast<std::size_t>(g.capacity()), -1);
    for (std::size_t i = 0; i < k; ++i) pos[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
    dist.assign(k, std::vector<int>(k, kUnreachable));
    sigma.assign(k, std::vector<double>(k, 0.0));
    std::vector<std::size_t> queue;
    for (std::size_t s = 0; s < k; ++s) {
      auto& d = dist[s];
      auto& sg = sigma[s];
      d[s] = 0;
      sg[s] = 1.0;
      queue.assign(1, s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t v = queue[head];
        for (int w_id : g.neighbors(ids[v])) {
          const auto w = static_cast<std::size_t>(pos[static_cast<std::size_t>(w_id)]);
          if (d[w] == kUnreachable) {
            d[w] = d[v] + 1;
            queue.push_back(w);
          }
          if (d[w] == d[v] + 1) sg[w] += sg[v];
        }
      }
    }
    through.assign(k, 0.0);
    for (std::size_t v = 0; v < k; ++v) {
      for (std::size_t s = 0; s < k; ++s) {
        if (s == v || dist[s][v] == kUnreachable) continue;
        for (std::size_t t = s + 1; t < k; ++t) {
          if (t == v) continue;
          through[v] += paths_via(s, v, t);
        }
      }
    }
  }

  /// Number of shortest s-t paths that pass through v.
  double paths_via(std::size_t s, std::size_t v, std::size_t t) const {
    if (dist[s][v] == kUnreachable || dist[v][t] == kUnreachable ||
        dist[s][t] == kUnreachable || dist[s][v] + dist[v][t] != dist[s][t]) {
      return 0.0;
    }
    return sigma[s][v] * sigma[v][t];
  }

  double factor(std::size_t i, std::size_t j) const {
    if (dist[i][j] == kUnreachable) return 0.0;
    if (dist[i][j] == 1) return 1.0;
    double share = 0.0;
    for (std::size_t v = 0; v < ids.size(); ++v) {
      if (v == i || v == j || through[v] == 0.0) continue;
      share += paths_via(i, v, j) / through[v];
    }
    return std::clamp(share / sigma[i][j], 0.0, 1.0);
  }
};

double connectivity_product(const CouplingGraph& g, std::span<const int> hosts) {
  const ShortestPathTable table(g.induced(hosts));
  double product = 1.0;
  for (std::size_t a = 0; a < hosts.size(); ++a) {
    for (std::size_t b = a + 1; b < hosts.size(); ++b) {
      const auto i = static_cast<std::size_t>(table.pos[static_cast<std::size_t>(hosts[a])]);
      const auto j = static_cast<std::size_t>(table.pos[static_cast<std::size_t>(hosts[b])]);
      product *= table.factor(i, j);
    }
  }
  return product;
}

double error_penalty(const CouplingGraph& g, const Mapping& pi) {
  double penalty = 0.0;
  for (std::size_t m = 0; m < pi.size(); ++m) {
    const int p = pi.assign[m];
    const auto& nbrs = g.neighbors(p);
    if (nbrs.empty()) continue;
    double sum = 0.0;
    for (int w : nbrs) sum += g.error(p, w);
    penalty += static_cast<double>(m + 1) * (sum / static_cast<double>(nbrs.size()));
  }
  return penalty;
}

void require_valid(const CouplingGraph& g, const Mapping& pi) {
  if (pi.size() == 0) throw InputError("objective: empty mapping");
  std::vector<bool> used(static_cast<std::size_t>(g.capacity()), false);
  for (int p : pi.assign) {
    if (!g.has_vertex(p) || used[static_cast<std::size_t>(p)]) {
      throw InputError("objective: invalid mapping");
    }
    used[static_cast<std::size_t>(p)] = true;
  }
}

// The connectivity product depends only on the host set, so tabu search
// evaluates it once per distinct set.
class ObjectiveCache {
 public:
  explicit ObjectiveCache(const CouplingGraph& g) : g_(g) {}

  double operator()(const Mapping& pi) {
    std::vector<int> key = pi.assign;
    std::sort(key.begin(), key.end());
    auto it = products_.find(key);
    if (it == products_.end()) {
      it = products_.emplace(key, connectivity_product(g_, pi.assign)).first;
    }
    return it->second - error_penalty(g_, pi);
  }

 private:
  const CouplingGraph& g_;
  std::map<std::vector<int>, double> products_;
};

}  // namespace

double connectivity_factor(const CouplingGraph& sub, int i, int j) {
  if (i == j) throw InputError("connectivity_factor: i == j");
  if (!sub.has_vertex(i) || !sub.has_vertex(j)) {
    throw InputError("connectivity_factor: qubit not in graph");
  }
  const ShortestPathTable table(sub);
  return table.factor(static_cast<std::size_t>(table.pos[static_cast<std::size_t>(i)]),
                      static_cast<std::size_t>(table.pos[static_cast<std::size_t>(j)]));
}

double objective(const CouplingGraph& g, const Mapping& pi) {
  require_valid(g, pi);
  return connectivity_product(g, pi.assign) - error_penalty(g, pi);
}

// ---------------------------------------------------------------------------
// Tabu search

TabuSearchResult kqpimo_search(const CouplingGraph& g, int n,
                               const TabuConfig& config) {
  if (config.tabu_len < 1) throw InputError("kqpimo: tabu length must be >= 1");
  if (config.iterations < 0) throw InputError("kqpimo: iterations must be >= 0");
  if (!g.is_connected()) throw InputError("kqpimo: coupling graph is disconnected");

  const std::vector<int> ikey = key_qubits(g);
  ObjectiveCache score(g);

  TabuSearchResult result;
  Rng seed_rng = Rng::substream(config.seed, 0);
  result.initial = kqpim(g, n, ikey, seed_rng);
  result.initial_score = score(result.initial);

  auto& table = result.table;
  table.push_back({result.initial, result.initial_score});

  const auto tabu_len = static_cast<std::size_t>(config.tabu_len);
  std::vector<int> perturbed(ikey.size());
  for (int it = 0; it < config.iterations; ++it) {
    std::vector<TabuEntry> candidates;
    candidates.reserve(tabu_len);
    for (std::size_t k = 0; k < tabu_len; ++k) {
      Rng rng = Rng::substream(config.seed, static_cast<std::uint64_t>(it) + 1, k);
      const auto shift = static_cast<std::ptrdiff_t>(rng.uniform_index(ikey.size()));
      std::rotate_copy(ikey.begin(), ikey.begin() + shift, ikey.end(),
                       perturbed.begin());
      Mapping pi = kqpim(g, n, perturbed, rng);
      const double s = score(pi);
      candidates.push_back({std::move(pi), s});
    }

    for (auto& cand : candidates) {
      const bool known = std::any_of(table.begin(), table.end(), [&](const TabuEntry& e) {
        return e.mapping == cand.mapping;
      });
      double mean = 0.0;
      for (const auto& e : table) mean += e.score;
      mean /= static_cast<double>(table.size());
      if (!known && cand.score >= mean) table.push_back(std::move(cand));
      if (table.size() > tabu_len) {
        // Drop the lowest score; among ties, the most recent entry.
        auto worst = table.begin();
        for (auto e = table.begin(); e != table.end(); ++e) {
          if (e->score <= worst->score) worst = e;
        }
        table.erase(worst);
      }
    }
  }

  auto best = table.begin();
  for (auto e = table.begin(); e != table.end(); ++e) {
    if (e->score > best->score) best = e;
  }
  result.best = best->mapping;
  result.best_score = best->score;
  return result;
}

}  // namespace lcnns
