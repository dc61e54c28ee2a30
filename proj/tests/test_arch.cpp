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

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "lcnns/arch.hpp"
#include "lcnns/error.hpp"
#include "oracles.hpp"

using lcnns::CouplingGraph;
using lcnns::Edge;

namespace {

CouplingGraph cycle(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n), 0.01});
  return CouplingGraph(n, e, "cycle");
}

CouplingGraph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.push_back({0, v, 0.01});
  return CouplingGraph(leaves + 1, e, "star");
}

}  // namespace

TEST_CASE("parse_arch") {
  const auto g = lcnns::parse_arch("qubits 2\nedge 0 1 0.01\n");
  CHECK(g.num_vertices() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.error(1, 0) == doctest::Approx(0.01));

  const auto quito = lcnns::parse_arch(
      "# quito\nqubits 5\n"
      "edge 0 1 1.631e-2\nedge 1 2 7.768e-3\nedge 1 3 7.440e-3\nedge 3 4 8.791e-3\n");
  CHECK(quito == lcnns::builtin("quito"));

  try {
    lcnns::parse_arch("qubits 2\nedge 0 1\n");
    FAIL("expected a parse error");
  } catch (const lcnns::ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(lcnns::parse_arch("edge 0 1 0.1\n"), lcnns::ParseError);
  CHECK_THROWS_AS(lcnns::parse_arch("qubits 2\nedge 0 2 0.1\n"), lcnns::ParseError);
  CHECK_THROWS_AS(lcnns::parse_arch("qubits 2\nedge 0 0 0.1\n"), lcnns::ParseError);
  CHECK_THROWS_AS(lcnns::parse_arch("qubits 2\nedge 0 1 1.5\n"), lcnns::ParseError);
  CHECK_THROWS_AS(lcnns::parse_arch("qubits 2\nedge 0 1 0.1\nedge 1 0 0.2\n"), lcnns::ParseError);
  CHECK_THROWS_AS(lcnns::parse_arch("qubits 2\nvertex 0\n"), lcnns::ParseError);
}

TEST_CASE("write_arch round trips every built-in") {
  for (const auto& name : lcnns::builtin_names()) {
    const auto g = lcnns::builtin(name);
    const auto back = lcnns::parse_arch(lcnns::write_arch(g));
    CHECK(back == g);
    for (const auto& e : g.edges()) CHECK(back.error(e.u, e.v) == e.error);
  }
}

TEST_CASE("built-in calibration data") {
  const auto quito = lcnns::builtin("quito");
  CHECK(quito.error(0, 1) == 1.631e-2);
  CHECK(quito.one_qubit_error() == 0.0017);
  CHECK(lcnns::builtin("guadalupe").error(12, 15) == 5.464e-3);
  CHECK(lcnns::builtin("guadalupe").num_vertices() == 16);
  CHECK(lcnns::builtin("tokyo").num_vertices() == 20);

  const auto l3 = lcnns::builtin("linear(3)");
  CHECK(l3.edges().size() == 2);
  CHECK(l3.has_edge(0, 1));
  CHECK(l3.has_edge(1, 2));
  CHECK_FALSE(l3.has_edge(0, 2));

  CHECK(lcnns::builtin("grid(2,3)").edges().size() == 7);
  CHECK_THROWS_AS(lcnns::builtin("nowhere"), lcnns::InputError);
  CHECK_THROWS_AS(lcnns::builtin("linear(0)"), lcnns::InputError);
  CHECK_THROWS_AS(lcnns::resolve_arch("/nonexistent/arch.txt"), lcnns::InputError);
}

TEST_CASE("articulation points") {
  using V = std::vector<int>;
  CHECK(lcnns::articulation_points(lcnns::builtin("quito")) == V{1, 3});
  CHECK(lcnns::articulation_points(lcnns::builtin("linear(4)")) == V{1, 2});
  CHECK(lcnns::articulation_points(cycle(4)).empty());
  CHECK(lcnns::articulation_points(star(5)) == V{0});

  for (const auto& name : lcnns::builtin_names()) {
    const auto g = lcnns::builtin(name);
    CHECK_MESSAGE(lcnns::articulation_points(g) == lcnns::oracle::cut_vertices(g), name);
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = lcnns::oracle::random_connected(2 + static_cast<int>(seed % 11), seed);
    CHECK(lcnns::articulation_points(g) == lcnns::oracle::cut_vertices(g));
  }
}

TEST_CASE("key qubits and cut points partition the vertices") {
  for (const auto& name : lcnns::builtin_names()) {
    const auto g = lcnns::builtin(name);
    CHECK_MESSAGE(g.is_connected(), name);
    std::vector<int> all = lcnns::articulation_points(g);
    const auto keys = lcnns::key_qubits(g);
    all.insert(all.end(), keys.begin(), keys.end());
    std::sort(all.begin(), all.end());
    CHECK(all == g.vertices());
  }
}

TEST_CASE("key qubits") {
  using V = std::vector<int>;
  CHECK(lcnns::key_qubits(lcnns::builtin("quito")) == V{0, 2, 4});
  CHECK(lcnns::key_qubits(lcnns::builtin("linear(2)")) == V{0, 1});
  CHECK(lcnns::key_qubits(star(5)) == V{1, 2, 3, 4, 5});
}

TEST_CASE("hamiltonian paths") {
  const auto path = lcnns::has_hamiltonian_path(lcnns::builtin("linear(5)"));
  REQUIRE(path);
  CHECK(*path == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_FALSE(lcnns::has_hamiltonian_path(lcnns::builtin("quito")));
  CHECK_FALSE(lcnns::has_hamiltonian_path(lcnns::builtin("guadalupe")));
  CHECK(lcnns::has_hamiltonian_path(cycle(6)));

  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const auto g = lcnns::oracle::random_connected(1 + static_cast<int>(seed % 8), seed);
    const auto found = lcnns::has_hamiltonian_path(g);
    CHECK(found.has_value() == lcnns::oracle::hamiltonian(g));
    if (found) {
      CHECK(found->size() == static_cast<std::size_t>(g.num_vertices()));
      for (std::size_t k = 0; k + 1 < found->size(); ++k) CHECK(g.has_edge((*found)[k], (*found)[k + 1]));
    }
  }
}

TEST_CASE("vertex removal keeps ids") {
  const auto l3 = lcnns::builtin("linear(3)").remove_vertex(0);
  CHECK(l3.num_vertices() == 2);
  CHECK_FALSE(l3.has_vertex(0));
  CHECK(l3.has_edge(1, 2));
  CHECK(l3.is_connected());

  const auto quito = lcnns::builtin("quito");
  const auto no1 = quito.remove_vertex(1);
  CHECK_FALSE(no1.is_connected());
  CHECK(no1.edges().size() == 1);
  CHECK(no1.has_edge(3, 4));
  CHECK(quito.remove_vertex(4).is_connected());
  CHECK(quito.remove_vertex(4).num_vertices() == 4);
  CHECK_THROWS_AS(no1.remove_vertex(1), lcnns::InputError);
  CHECK_THROWS_AS(lcnns::articulation_points(no1), lcnns::InputError);
}

TEST_CASE("graph construction rejects bad input") {
  const std::vector<Edge> loop{{1, 1, 0.1}};
  CHECK_THROWS_AS(CouplingGraph(2, loop), lcnns::InputError);
  const std::vector<Edge> far{{0, 5, 0.1}};
  CHECK_THROWS_AS(CouplingGraph(2, far), lcnns::InputError);
  const std::vector<Edge> neg{{0, 1, -0.1}};
  CHECK_THROWS_AS(CouplingGraph(2, neg), lcnns::InputError);
  CHECK_THROWS_AS(lcnns::builtin("quito").error(0, 2), lcnns::InputError);
}
