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

#include <numeric>
#include <vector>

#include "lcnns/arch.hpp"
#include "lcnns/circuit.hpp"
#include "lcnns/error.hpp"
#include "lcnns/synth.hpp"
#include "oracles.hpp"

using lcnns::Cnot;
using lcnns::CouplingGraph;
using lcnns::Mapping;
using lcnns::ParityMatrix;
using V = std::vector<int>;
using Ops = std::vector<Cnot>;

namespace {

V iota(std::size_t n) {
  V v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

CouplingGraph residual_for(const CouplingGraph& g, const Mapping& pi, std::size_t layer) {
  const V hosts(pi.assign.begin() + static_cast<std::ptrdiff_t>(layer), pi.assign.end());
  return g.induced(hosts);
}

bool unit_prefix(const ParityMatrix& m, std::size_t upto) {
  for (std::size_t k = 0; k <= upto; ++k) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m.get(k, j) != (k == j) || m.get(j, k) != (k == j)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("tarm picks the target-aided rows") {
  const auto m = ParityMatrix::from_rows({{1, 0, 0, 0, 0},
                                          {0, 1, 1, 0, 1},
                                          {0, 0, 1, 0, 0},
                                          {0, 0, 1, 1, 0},
                                          {0, 0, 0, 1, 1}});
  const V order = iota(5);
  CHECK(lcnns::tarm(m, 1, order) == V{3, 4});
  CHECK(lcnns::tarm_bruteforce(m, 1, order) == V{3, 4});
  CHECK(lcnns::tarm(m, 0, order).empty());
  CHECK_THROWS_AS(lcnns::tarm(m, 5, order), lcnns::InputError);
  CHECK_THROWS_AS(lcnns::tarm(m, 0, V{0, 1, 2}), lcnns::InputError);
}

TEST_CASE("tarm agrees with subset enumeration after in-order elimination") {
  const auto line = lcnns::builtin("linear(6)");
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto m = lcnns::random_invertible(6, seed);
    const Mapping pi{iota(6)};
    for (std::size_t layer = 0; layer < 6; ++layer) {
      const auto res = residual_for(line, pi, layer);
      lcnns::eliminate_column(m, res, pi, layer);
      const auto want = lcnns::oracle::tarm_subset(m, layer, iota(6));
      REQUIRE(want.has_value());
      const auto got = lcnns::tarm(m, layer, iota(6));
      lcnns::BitVector acc(6);
      for (int k : got) acc ^= m.row(static_cast<std::size_t>(k));
      lcnns::BitVector target = m.row(layer);
      target.flip(layer);
      CHECK(acc == target);
      CHECK(got == *want);
      CHECK(lcnns::tarm_bruteforce(m, layer, iota(6)) == *want);
      lcnns::eliminate_row(m, res, pi, layer);
      CHECK(unit_prefix(m, layer));
    }
    CHECK(m.is_identity());
  }
}

TEST_CASE("column step follows the worked example") {
  const auto quito = lcnns::builtin("quito");
  auto m = ParityMatrix::from_rows({{1, 0, 0, 0, 0},
                                    {0, 1, 0, 0, 0},
                                    {1, 0, 1, 0, 0},
                                    {0, 0, 0, 1, 0},
                                    {1, 0, 0, 0, 1}});
  const Mapping pi{{0, 4, 3, 1, 2}};
  REQUIRE(lcnns::check_mapping(quito, pi).empty());
  const auto ops = lcnns::eliminate_column(m, quito, pi, 0);
  CHECK(ops == Ops{{4, 3}, {3, 4}, {3, 2}, {0, 3}});
  for (std::size_t r = 0; r < 5; ++r) CHECK(m.get(r, 0) == (r == 0));
}

TEST_CASE("column step edge cases") {
  const auto line = lcnns::builtin("linear(5)");
  auto id = ParityMatrix::identity(5);
  CHECK(lcnns::eliminate_column(id, line, Mapping{iota(5)}, 0).empty());

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto m = lcnns::random_invertible(5, seed);
    const Mapping pi{iota(5)};
    lcnns::eliminate_column(m, line, pi, 0);
    for (std::size_t r = 0; r < 5; ++r) CHECK(m.get(r, 0) == (r == 0));
  }
}

TEST_CASE("row step through a Steiner point") {
  const auto line = lcnns::builtin("linear(3)");
  auto m = ParityMatrix::from_rows({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
  const Mapping pi{iota(3)};
  const auto ops = lcnns::eliminate_row(m, line, pi, 0);
  CHECK(ops == Ops{{1, 0}, {2, 1}, {1, 0}});
  CHECK(m.row(0) == lcnns::BitVector{1, 0, 0});

  auto unit = ParityMatrix::identity(3);
  CHECK(lcnns::eliminate_row(unit, line, pi, 0).empty());

  auto dirty = ParityMatrix::from_rows({{1, 0, 1}, {1, 1, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(lcnns::eliminate_row(dirty, line, pi, 0), lcnns::InvariantError);
}

TEST_CASE("lcnns small cases") {
  const auto line2 = lcnns::builtin("linear(2)");
  const lcnns::TabuConfig cfg;
  const auto none = lcnns::lcnns(ParityMatrix::identity(2), line2, cfg);
  CHECK(none.gates.empty());
  CHECK(none.cnot_count == 0);
  CHECK(none.depth == 0);

  const Ops single{{0, 1}};
  const auto m = lcnns::from_circuit(single, 2);
  const auto r = lcnns::lcnns(m, line2, cfg);
  REQUIRE(r.gates.size() == 1);
  CHECK(r.gates[0] == Cnot{r.mapping.physical(0), r.mapping.physical(1)});
  CHECK(lcnns::verify_equivalence(m, r, line2));

  CHECK_THROWS_AS(lcnns::lcnns(ParityMatrix::from_rows({{1, 1}, {1, 1}}), line2, cfg),
                  lcnns::InputError);
  CHECK_THROWS_AS(lcnns::lcnns(ParityMatrix::identity(3), line2, cfg), lcnns::InputError);
  CHECK_THROWS_AS(lcnns::lcnns(ParityMatrix::identity(2), lcnns::builtin("linear(3)"),
                               Mapping{{0, 2}}),
                  lcnns::InputError);
}

TEST_CASE("lcnns on guadalupe stays sound and within the bound") {
  const auto g = lcnns::builtin("guadalupe");
  lcnns::Synthesizer synth(g, lcnns::TabuConfig{});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = lcnns::random_cnot_circuit(16, 100 + seed * 10, seed);
    const auto m = lcnns::from_circuit(c.cnots(), 16);
    const auto r = synth.run(m);
    const auto v = lcnns::verify_equivalence(m, r, g);
    CHECK_MESSAGE(v.ok, v.diagnostic);
    CHECK(r.cnot_count <= 512);
    CHECK(r.cnot_count == r.gates.size());
    CHECK(r.depth == lcnns::depth(r.gates));
    const Ops replay(r.recorded_ops.rbegin(), r.recorded_ops.rend());
    CHECK(lcnns::from_circuit(replay, 16) == m);
    for (const auto& gate : r.gates) CHECK(g.has_edge(gate.control, gate.target));
  }
}

TEST_CASE("fewer logical qubits than the device") {
  const auto g = lcnns::builtin("tokyo");
  for (int n = 2; n <= 12; n += 5) {
    const auto m = lcnns::random_invertible(static_cast<std::size_t>(n), 77);
    const auto r = lcnns::lcnns(m, g, lcnns::TabuConfig{5, 5, 1});
    CHECK(lcnns::verify_equivalence(m, r, g));
    CHECK(r.cnot_count <= static_cast<std::size_t>(2 * n * n));
  }
}

TEST_CASE("verify_equivalence detects tampering") {
  const auto g = lcnns::builtin("quito");
  const auto m = lcnns::random_invertible(5, 3);
  auto r = lcnns::lcnns(m, g, lcnns::TabuConfig{});
  REQUIRE(lcnns::verify_equivalence(m, r, g));
  REQUIRE_FALSE(r.gates.empty());

  auto dropped = r;
  dropped.gates.erase(dropped.gates.begin());
  CHECK_FALSE(lcnns::verify_equivalence(m, dropped, g));

  // Gates and log still agree; only the rebuilt matrix differs.
  auto both = dropped;
  both.recorded_ops.pop_back();
  const auto v = lcnns::verify_equivalence(m, both, g);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.diagnostic.empty());

  auto off_edge = r;
  off_edge.gates[0] = Cnot{0, 2};
  CHECK_FALSE(lcnns::verify_equivalence(m, off_edge, g));

  CHECK(lcnns::verify_equivalence(ParityMatrix::identity(2),
                                  lcnns::lcnns(ParityMatrix::identity(2),
                                               lcnns::builtin("linear(2)"), lcnns::TabuConfig{}),
                                  lcnns::builtin("linear(2)")));
}

TEST_CASE("Synthesizer caches one mapping per size") {
  lcnns::Synthesizer s(lcnns::builtin("guadalupe"), lcnns::TabuConfig{4, 4, 9});
  const auto& a = s.mapping_for(6);
  CHECK(&a == &s.mapping_for(6));
  CHECK(a == lcnns::kqpimo(s.graph(), 6, s.config()));
}
