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

#include <charconv>
#include <filesystem>
#include <utility>

#include "lcnns/arch.hpp"
#include "lcnns/error.hpp"

namespace lcnns {
namespace {

// Uniform CNOT error for topologies without per-edge calibration.
constexpr double kParametricError = 0.01;
constexpr double kManilaError = 0.0116;
constexpr double kTokyoError = 0.0313;

CouplingGraph chain(int n, double error, std::string name) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, error});
  return CouplingGraph(n, edges, std::move(name));
}

CouplingGraph quito() {
  const std::vector<Edge> edges = {
      {0, 1, 1.631e-2}, {1, 2, 7.768e-3}, {1, 3, 7.440e-3}, {3, 4, 8.791e-3}};
  CouplingGraph g(5, edges, "quito");
  g.set_one_qubit_error(0.0017);
  return g;
}

CouplingGraph guadalupe() {
  const std::vector<Edge> edges = {
      {0, 1, 1.206e-2},  {1, 2, 1.208e-2},   {2, 3, 1.332e-2},
      {3, 5, 1.187e-2},  {5, 8, 7.481e-3},   {8, 9, 1.045e-2},
      {8, 11, 9.076e-3}, {11, 14, 7.613e-3}, {13, 14, 8.800e-3},
      {12, 13, 6.825e-3}, {12, 15, 5.464e-3}, {10, 12, 1.326e-2},
      {7, 10, 1.523e-2}, {4, 7, 2.458e-2},   {1, 4, 8.158e-3},
      {6, 7, 1.073e-2}};
  CouplingGraph g(16, edges, "guadalupe");
  g.set_one_qubit_error(0.0004);
  return g;
}

CouplingGraph manila() {
  CouplingGraph g = chain(5, kManilaError, "manila");
  g.set_one_qubit_error(0.0011);
  return g;
}

// OriginQ Wuyuan II: 6-qubit chain, error = 1 - CZ fidelity per coupling.
CouplingGraph wuyuan2() {
  const std::vector<Edge> edges = {{0, 1, 1.0 - 0.9851},
                                   {1, 2, 1.0 - 0.9619},
                                   {2, 3, 1.0 - 0.7014},
                                   {3, 4, 1.0 - 0.8256},
                                   {4, 5, 1.0 - 0.7132}};
  CouplingGraph g(6, edges, "wuyuan2");
  // Mean of the listed single-qubit gate fidelities.
  g.set_one_qubit_error(
      1.0 - (0.9989 + 0.9989 + 0.9961 + 0.998 + 0.9987 + 0.9982) / 6.0);
  return g;
}

// Quafu ScQ-10: 10-qubit chain. Device qubits Q1..Q10 map to 0..9.
CouplingGraph scq10() {
  const double fidelity[] = {0.9787, 0.9564, 0.949,  0.963, 0.9669,
                             0.9663, 0.956,  0.9741, 0.9909};
  std::vector<Edge> edges;
  for (int i = 0; i < 9; ++i) edges.push_back({i, i + 1, 1.0 - fidelity[i]});
  return CouplingGraph(10, edges, "scq10");
}

CouplingGraph tokyo() {
  const std::pair<int, int> pairs[] = {
      {0, 1},   {1, 2},   {2, 3},   {3, 4},   {0, 5},   {1, 6},   {2, 7},
      {3, 8},   {4, 9},   {3, 9},   {4, 8},   {5, 6},   {6, 7},   {7, 8},
      {8, 9},   {5, 10},  {6, 11},  {7, 12},  {8, 13},  {5, 11},  {6, 10},
      {7, 13},  {8, 12},  {10, 11}, {11, 12}, {12, 13}, {13, 14}, {10, 15},
      {11, 16}, {13, 18}, {14, 19}, {11, 17}, {12, 16}, {13, 19}, {14, 18},
      {15, 16}, {16, 17}};
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, kTokyoError});
  return CouplingGraph(20, edges, "tokyo");
}

CouplingGraph grid(int rows, int cols) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1, kParametricError});
      if (r + 1 < rows) edges.push_back({v, v + cols, kParametricError});
    }
  }
  return CouplingGraph(rows * cols, edges,
                       "grid(" + std::to_string(rows) + "," +
                           std::to_string(cols) + ")");
}

// Parses "name(a)" or "name(a,b)" into its integer arguments.
bool parse_call(std::string_view text, std::string_view name,
                std::vector<int>& args) {
  if (text.size() < name.size() + 2 || text.substr(0, name.size()) != name ||
      text[name.size()] != '(' || text.back() != ')') {
    return false;
  }
  std::string_view inner = text.substr(name.size() + 1,
                                       text.size() - name.size() - 2);
  args.clear();
  while (true) {
    const auto comma = inner.find(',');
    std::string_view item = inner.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) return false;
    args.push_back(value);
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  return true;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"quito", "guadalupe", "manila", "wuyuan2", "scq10", "tokyo"};
}

CouplingGraph builtin(std::string_view name) {
  if (name == "quito") return quito();
  if (name == "guadalupe") return guadalupe();
  if (name == "manila") return manila();
  if (name == "wuyuan2") return wuyuan2();
  if (name == "scq10") return scq10();
  if (name == "tokyo") return tokyo();

  std::vector<int> args;
  if (parse_call(name, "linear", args) && args.size() == 1) {
    if (args[0] < 1) throw InputError("linear(n) needs n >= 1");
    return chain(args[0], kParametricError,
                 "linear(" + std::to_string(args[0]) + ")");
  }
  if (parse_call(name, "grid", args) && args.size() == 2) {
    if (args[0] < 1 || args[1] < 1) throw InputError("grid(r,c) needs r,c >= 1");
    return grid(args[0], args[1]);
  }
  throw InputError("unknown architecture '" + std::string(name) + "'");
}

CouplingGraph resolve_arch(const std::string& name_or_path) {
  try {
    return builtin(name_or_path);
  } catch (const InputError&) {
    if (std::filesystem::exists(name_or_path)) return load_arch_file(name_or_path);
    if (name_or_path.find('(') != std::string::npos) throw;
    throw InputError("unknown architecture '" + name_or_path +
                     "': not a built-in name and no such file");
  }
}

}  // namespace lcnns
