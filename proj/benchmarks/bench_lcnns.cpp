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

#include <benchmark/benchmark.h>

#include <numeric>
#include <string>
#include <vector>

#include "lcnns/arch.hpp"
#include "lcnns/circuit.hpp"
#include "lcnns/mapping.hpp"
#include "lcnns/steiner.hpp"
#include "lcnns/synth.hpp"

namespace {

const std::vector<std::string> kArchs{"quito", "guadalupe", "linear(16)", "tokyo"};

void BM_Lcnns(benchmark::State& state) {
  const auto g = lcnns::builtin(kArchs[static_cast<std::size_t>(state.range(0))]);
  const auto n = static_cast<std::size_t>(g.num_vertices());
  const auto pi = lcnns::kqpimo(g, static_cast<int>(n), lcnns::TabuConfig{});
  const auto c = lcnns::random_cnot_circuit(static_cast<int>(n), static_cast<std::size_t>(state.range(1)), 1);
  const auto m = lcnns::from_circuit(c.cnots(), n);
  std::size_t gates = 0;
  for (auto _ : state) {
    auto r = lcnns::lcnns(m, g, pi);
    gates = r.cnot_count;
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(g.name());
  state.counters["cnot"] = static_cast<double>(gates);
}
BENCHMARK(BM_Lcnns)->ArgsProduct({{0, 1, 2, 3}, {100, 1000}})->Unit(benchmark::kMicrosecond);

void BM_Kqpimo(benchmark::State& state) {
  const auto g = lcnns::builtin(kArchs[static_cast<std::size_t>(state.range(0))]);
  const int n = g.num_vertices();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto pi = lcnns::kqpimo(g, n, lcnns::TabuConfig{20, 50, seed++});
    benchmark::DoNotOptimize(pi);
  }
  state.SetLabel(g.name());
}
BENCHMARK(BM_Kqpimo)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Mnst(benchmark::State& state) {
  const auto g = lcnns::builtin("tokyo");
  std::vector<int> terminals;
  for (int v = 1; v < g.capacity(); v += static_cast<int>(state.range(0))) terminals.push_back(v);
  for (auto _ : state) {
    auto t = lcnns::mnst(g, 0, terminals);
    benchmark::DoNotOptimize(t);
  }
  state.counters["terminals"] = static_cast<double>(terminals.size());
}
BENCHMARK(BM_Mnst)->Arg(1)->Arg(3)->Arg(7);

void BM_Tarm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = lcnns::random_invertible(n, 5);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto line = lcnns::builtin("linear(" + std::to_string(n) + ")");
  lcnns::eliminate_column(m, line, lcnns::Mapping{order}, 0);
  for (auto _ : state) {
    auto s = lcnns::tarm(m, 0, order);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Tarm)->Arg(8)->Arg(16)->Arg(64);

void BM_MonteCarlo(benchmark::State& state) {
  const auto g = lcnns::builtin("quito");
  const auto pi = lcnns::kqpimo(g, 5, lcnns::TabuConfig{});
  const auto m = lcnns::from_circuit(lcnns::random_cnot_circuit(5, 100, 3).cnots(), 5);
  const auto r = lcnns::lcnns(m, g, pi);
  const auto c = lcnns::make_cnot_circuit(g.capacity(), r.gates);
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lcnns::monte_carlo_fidelity(c, g, shots, 9));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shots));
}
BENCHMARK(BM_MonteCarlo)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
