// Copyright 2026 The leafspace Authors
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

#include "leafspace/corpus.hpp"
#include "leafspace/endorder.hpp"
#include "leafspace/morphisms.hpp"
#include "leafspace/paths.hpp"

namespace {

using namespace leafspace;

LeafSpace model(std::int64_t junctions) {
  return generate({42, static_cast<std::size_t>(junctions), 4, 0.5});
}

void BM_Generate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(model(state.range(0)));
}
BENCHMARK(BM_Generate)->RangeMultiplier(2)->Range(1, 64);

void BM_BrokenPathEnds(benchmark::State& state) {
  const LeafSpace L = model(state.range(0));
  const std::vector<EndRef> pos = ends(L).positive;
  for (auto _ : state) benchmark::DoNotOptimize(broken_path_ends(L, pos.front(), pos.back()));
}
BENCHMARK(BM_BrokenPathEnds)->RangeMultiplier(2)->Range(1, 64);

void BM_NMatrix(benchmark::State& state) {
  const LeafSpace L = model(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(n_matrix(L));
  state.counters["ends"] = static_cast<double>(ends(L).positive.size());
}
BENCHMARK(BM_NMatrix)->RangeMultiplier(2)->Range(1, 32);

void BM_EndOrder(benchmark::State& state) {
  const LeafSpace L = model(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(end_order(L));
}
BENCHMARK(BM_EndOrder)->RangeMultiplier(2)->Range(1, 32);

void BM_Automorphisms(benchmark::State& state) {
  const LeafSpace L = model(state.range(0));
  const auto mode = state.range(1) ? Enumeration::Exhaustive : Enumeration::Pruned;
  state.counters["nodes"] = double(L.node_count());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_automorphisms(L, 1024, mode));
}
BENCHMARK(BM_Automorphisms)->Args({2, 0})->Args({7, 0})->Args({12, 0})->Args({2, 1})->Args({7, 1});

void BM_RoundTrip(benchmark::State& state) {
  const LeafSpace L = model(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(parse(serialize(L)));
}
BENCHMARK(BM_RoundTrip)->RangeMultiplier(4)->Range(1, 64);

}  // namespace

BENCHMARK_MAIN();
