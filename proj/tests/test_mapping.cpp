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

#include <vector>

#include "lcnns/arch.hpp"
#include "lcnns/error.hpp"
#include "lcnns/mapping.hpp"
#include "oracles.hpp"

using lcnns::CouplingGraph;
using lcnns::Edge;
using lcnns::Mapping;
using lcnns::Rng;
using V = std::vector<int>;

TEST_CASE("check_mapping") {
  const auto quito = lcnns::builtin("quito");
  CHECK(lcnns::check_mapping(quito, Mapping{{0, 2, 4, 3, 1}}).empty());
  CHECK_FALSE(lcnns::check_mapping(quito, Mapping{{1, 0, 2, 3, 4}}).empty());
  CHECK_FALSE(lcnns::check_mapping(quito, Mapping{{0, 0, 2, 3, 4}}).empty());
  CHECK_FALSE(lcnns::check_mapping(quito, Mapping{{0, 9}}).empty());
  CHECK(lcnns::check_mapping(lcnns::builtin("linear(5)"), Mapping{{0, 1, 2}}).empty());
  CHECK_FALSE(lcnns::check_mapping(lcnns::builtin("linear(5)"), Mapping{{0, 4, 1}}).empty());
}

TEST_CASE("kqpim") {
  Rng rng(1);
  const V head{0};
  CHECK(lcnns::kqpim(lcnns::builtin("linear(3)"), 3, head, rng).assign == V{0, 1, 2});

  const auto quito = lcnns::builtin("quito");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng r(seed);
    const auto pi = lcnns::kqpim(quito, 5, head, r);
    CHECK(pi.assign.front() == 0);
    CHECK(lcnns::check_mapping(quito, pi).empty());
    CHECK(lcnns::oracle::removal_replay_ok(quito, pi.assign));
  }

  const V cut{1};
  CHECK_THROWS_AS(lcnns::kqpim(quito, 5, cut, rng), lcnns::InputError);
  CHECK_THROWS_AS(lcnns::kqpim(quito, 6, head, rng), lcnns::InputError);
  CHECK_THROWS_AS(lcnns::kqpim(quito, 0, head, rng), lcnns::InputError);
  CHECK_THROWS_AS(lcnns::kqpim(quito, 5, V{}, rng), lcnns::InputError);
}

TEST_CASE("kqpim on fewer logical than physical qubits") {
  for (const auto& name : lcnns::builtin_names()) {
    const auto g = lcnns::builtin(name);
    const auto keys = lcnns::key_qubits(g);
    for (int n = 1; n <= g.num_vertices(); ++n) {
      Rng rng(static_cast<std::uint64_t>(n));
      const auto pi = lcnns::kqpim(g, n, keys, rng);
      CHECK(pi.size() == static_cast<std::size_t>(n));
      CHECK_MESSAGE(lcnns::check_mapping(g, pi).empty(), name << " n=" << n);
    }
  }
}

TEST_CASE("connectivity_factor") {
  const auto line = lcnns::builtin("linear(3)");
  CHECK(lcnns::connectivity_factor(line, 0, 1) == 1.0);
  CHECK(lcnns::connectivity_factor(line, 0, 2) ==
        doctest::Approx(lcnns::oracle::connectivity(line, 0, 2)).epsilon(1e-12));
  // One shortest pair {0,2} routes through 1, so the share is 1.
  CHECK(lcnns::connectivity_factor(line, 0, 2) == 1.0);

  const std::vector<Edge> two_parts{{0, 1, 0.01}, {2, 3, 0.01}};
  const CouplingGraph split(4, two_parts);
  CHECK(lcnns::connectivity_factor(split, 0, 3) == 0.0);
  CHECK_THROWS_AS(lcnns::connectivity_factor(line, 1, 1), lcnns::InputError);

  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto g = lcnns::oracle::random_connected(3 + static_cast<int>(seed % 5), seed);
    for (int i : g.vertices()) {
      for (int j : g.vertices()) {
        if (i == j) continue;
        CHECK(lcnns::connectivity_factor(g, i, j) ==
              doctest::Approx(lcnns::oracle::connectivity(g, i, j)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("objective") {
  const std::vector<Edge> one{{0, 1, 0.01}};
  const CouplingGraph pair(2, one);
  CHECK(lcnns::objective(pair, Mapping{{0, 1}}) == doctest::Approx(0.97).epsilon(1e-12));

  const std::vector<Edge> k4{{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 0}, {2, 3, 0}};
  const CouplingGraph clique(4, k4);
  CHECK(lcnns::objective(clique, Mapping{{2, 0, 3, 1}}) == 1.0);

  for (const auto& name : {"quito", "guadalupe", "linear(5)", "scq10", "wuyuan2"}) {
    const auto g = lcnns::builtin(name);
    std::vector<int> pi = g.vertices();
    if (!lcnns::check_mapping(g, Mapping{pi}).empty()) {
      Rng rng(3);
      pi = lcnns::kqpim(g, g.num_vertices(), lcnns::key_qubits(g), rng).assign;
    }
    CHECK_MESSAGE(lcnns::objective(g, Mapping{pi}) ==
                      doctest::Approx(lcnns::oracle::objective(g, pi)).epsilon(1e-12),
                  name);
  }
  const auto quito = lcnns::builtin("quito");
  const V identity{0, 1, 2, 3, 4};
  CHECK(lcnns::objective(quito, Mapping{identity}) ==
        doctest::Approx(lcnns::oracle::objective(quito, identity)).epsilon(1e-12));
}

TEST_CASE("kqpimo") {
  const auto quito = lcnns::builtin("quito");
  lcnns::TabuConfig none{20, 0, 7};
  const auto frozen = lcnns::kqpimo_search(quito, 5, none);
  CHECK(frozen.best == frozen.initial);
  CHECK(frozen.table.size() == 1);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const lcnns::TabuConfig cfg{20, 30, seed};
    const auto r = lcnns::kqpimo_search(quito, 5, cfg);
    CHECK(r.best_score >= r.initial_score);
    CHECK(r.best_score == doctest::Approx(lcnns::objective(quito, r.best)).epsilon(1e-12));
    CHECK(r.table.size() <= 20);
    CHECK(lcnns::check_mapping(quito, r.best).empty());
    CHECK(lcnns::kqpimo(quito, 5, cfg) == r.best);
  }

  const auto g = lcnns::builtin("guadalupe");
  const lcnns::TabuConfig cfg{5, 10, 42};
  CHECK(lcnns::kqpimo(g, 16, cfg) == lcnns::kqpimo(g, 16, cfg));
  CHECK(lcnns::kqpimo(g, 7, cfg).size() == 7);

  CHECK_THROWS_AS(lcnns::kqpimo(quito, 5, lcnns::TabuConfig{0, 5, 1}), lcnns::InputError);
  CHECK_THROWS_AS(lcnns::kqpimo(quito, 5, lcnns::TabuConfig{5, -1, 1}), lcnns::InputError);
}
