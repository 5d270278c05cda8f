// Copyright 2026 The glovecore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "glovecore/builtin_games.hpp"
#include "glovecore/core_solver.hpp"
#include "glovecore/heuristic.hpp"
#include "glovecore/partition.hpp"

namespace {

using namespace glovecore;

void BM_EnumeratePartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for (PartitionCursor c(n); !c.done(); c.advance()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bell_number(n)));
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(6, 11);

void BM_CoreSet(benchmark::State& state) {
  const auto& g = *builtin_game("g" + std::to_string(state.range(0)) + ".1");
  for (auto _ : state) benchmark::DoNotOptimize(core_set(g).size());
}
BENCHMARK(BM_CoreSet)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_CoreMembership(benchmark::State& state) {
  const auto& g = *builtin_game("g8.1");
  const auto cs = CoalitionStructure::parse("(0)(1,4)(2,6)(3)(5)(7)", 8);
  for (auto _ : state) benchmark::DoNotOptimize(is_core_member(g, cs));
}
BENCHMARK(BM_CoreMembership);

void BM_Run(benchmark::State& state) {
  const auto& g = *builtin_game("g9.1");
  SimConfig c;
  c.algorithm = state.range(0) == 0 ? Algorithm::kSixRoutine : Algorithm::kBaseline;
  c.stability_window = 0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    c.seed = seed++;
    benchmark::DoNotOptimize(run(g, c).accepted_moves);
  }
}
BENCHMARK(BM_Run)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Step(benchmark::State& state) {
  SimConfig c;
  c.stop_at_fixed_point = false;
  Simulation sim(*builtin_game("g9.1"), c);
  for (auto _ : state) benchmark::DoNotOptimize(sim.step());
}
BENCHMARK(BM_Step);

}  // namespace

BENCHMARK_MAIN();
