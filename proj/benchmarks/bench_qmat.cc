// Copyright 2026 The qmat Authors.
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

#include "qmat/maps.h"
#include "qmat/repro.h"

namespace qmat {
namespace {

void BM_FieldMul(benchmark::State& state) {
  auto f = Field::make(2, 1, 8);
  Elem acc = 1;
  for (auto _ : state) {
    for (Elem x = 1; x < 256; ++x) acc = f->mul(acc, x) ^ 1u;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 255);
}
BENCHMARK(BM_FieldMul);

void BM_EnumerateSubspaces(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<std::uint32_t>(state.range(1));
  std::size_t count = 0;
  for (auto _ : state) {
    count = enumerate_subspaces(q, n).size();
    benchmark::DoNotOptimize(count);
  }
  state.counters["subspaces"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateSubspaces)->Args({2, 4})->Args({2, 6})->Args({3, 4});

// Rank of every subspace through the matrix backend; fresh matroid per run so
// the memo starts cold.
void BM_MatrixRankTable(benchmark::State& state) {
  const auto all = enumerate_subspaces(2, 4);
  for (auto _ : state) {
    const QMatroid m = blockdiag_matroid(2, 4, 2);
    std::uint32_t s = 0;
    for (const Subspace& v : all) s += m.rank(v);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_MatrixRankTable);

void BM_Flats(benchmark::State& state) {
  const QMatroid m = blockdiag_matroid(2, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(flats(m).size());
}
BENCHMARK(BM_Flats);

void BM_RankAxioms(benchmark::State& state) {
  const QMatroid m = example_nonrepresentable();
  for (auto _ : state) benchmark::DoNotOptimize(check_rank_axioms(m).checked);
}
BENCHMARK(BM_RankAxioms);

void BM_IsoBlockDiag(benchmark::State& state) {
  const QMatroid a = blockdiag_matroid(2, 4, 1), b = blockdiag_matroid(2, 4, 2);
  IsoOptions opt;
  opt.prune = state.range(0) != 0;
  std::uint64_t leaves = 0;
  for (auto _ : state) {
    leaves = is_isomorphic(a, b, opt).leaves;
    benchmark::DoNotOptimize(leaves);
  }
  state.counters["leaves"] = static_cast<double>(leaves);
}
BENCHMARK(BM_IsoBlockDiag)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassifyMap(benchmark::State& state) {
  const QMatroid u = QMatroid::uniform(2, 4, 2), s = example_nonrepresentable();
  const LMap id = identity_map(2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(classify_map(id, u, s).is_weak);
}
BENCHMARK(BM_ClassifyMap);

void BM_NonlinearExtensionSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_thm_nonlinear_noncoproduct(2).ok());
}
BENCHMARK(BM_NonlinearExtensionSearch)->Unit(benchmark::kMillisecond);

// Counts every L-map F_2^2 -> F_2^3; only 0 is fixed.
void BM_ExtensionSearchFree(benchmark::State& state) {
  ExtensionSearch s;
  s.q = 2;
  s.n1 = 2;
  s.n2 = 3;
  s.fixed.assign(4, std::nullopt);
  s.fixed[0] = Vec{0};
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = search_lmap_extensions(s).solution_count;
    benchmark::DoNotOptimize(count);
  }
  state.counters["solutions"] = static_cast<double>(count);
}
BENCHMARK(BM_ExtensionSearchFree);

}  // namespace
}  // namespace qmat
