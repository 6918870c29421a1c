// Copyright 2026 The gpwaring Authors
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

#include "gpw/arith.hpp"
#include "gpw/ff.hpp"
#include "gpw/gpgraph.hpp"
#include "gpw/reduction.hpp"

namespace {

void BM_BuildField(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gpw::build_field(2, m));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << m));
}
BENCHMARK(BM_BuildField)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_WaringBfs(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(1));
  const gpw::GPGraph g(gpw::build_field(2, m), k);
  for (auto _ : state) benchmark::DoNotOptimize(gpw::waring_bfs(g, std::uint64_t{1} << 20));
  state.counters["n"] = static_cast<double>(g.n());
}
BENCHMARK(BM_WaringBfs)
    ->Args({12, 13})
    ->Args({16, 3})
    ->Args({18, 7})
    ->Args({20, 41943})
    ->Unit(benchmark::kMillisecond);

void BM_WaringBfsPrimeField(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const gpw::GPGraph g(gpw::build_field(p, 1), (p - 1) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(gpw::waring_bfs(g));
}
BENCHMARK(BM_WaringBfsPrimeField)->Arg(1009)->Arg(65521)->Unit(benchmark::kMillisecond);

void BM_CartesianDecomposition(benchmark::State& state) {
  const gpw::GPGraph g(gpw::build_field(7, 6), 817);
  for (auto _ : state) benchmark::DoNotOptimize(gpw::cartesian_decomposition(g));
}
BENCHMARK(BM_CartesianDecomposition)->Unit(benchmark::kMillisecond);

void BM_Factorize(benchmark::State& state) {
  const gpw::BigInt n = gpw::ipow(gpw::BigInt(2), static_cast<std::uint64_t>(state.range(0))) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(gpw::factorize(n));
}
BENCHMARK(BM_Factorize)->Arg(60)->Arg(96)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_Reduce(benchmark::State& state) {
  const gpw::BigInt k = (gpw::ipow(gpw::BigInt(47), 23) - 1) / 529;
  for (auto _ : state) benchmark::DoNotOptimize(gpw::reduce(k, 47, 23));
}
BENCHMARK(BM_Reduce)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
