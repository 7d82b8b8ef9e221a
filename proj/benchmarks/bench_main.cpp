// Copyright 2026 The graphmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "graphmub/matrix.hpp"
#include "graphmub/mub_set.hpp"
#include "graphmub/statevector.hpp"
#include "graphmub/symrep.hpp"

namespace {

using namespace graphmub;

void BM_CharPoly(benchmark::State& state) {
  PrimeModulus const p(7);
  auto const n = static_cast<std::size_t>(state.range(0));
  MatZp m(p, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, static_cast<std::int64_t>((r * 5 + c * 3 + 1) % 7));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_TridiagSearch(benchmark::State& state) {
  PrimeModulus const p(static_cast<std::uint64_t>(state.range(0)));
  auto const n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tridiag_search(p, n, std::nullopt, TridiagRequirement::kPrimitive));
  }
}
BENCHMARK(BM_TridiagSearch)->Args({2, 8})->Args({3, 6})->Args({7, 4});

void BM_SymmetrizeCompanion(benchmark::State& state) {
  PrimeModulus const p(static_cast<std::uint64_t>(state.range(0)));
  auto const f = find_irreducible(p, static_cast<std::size_t>(state.range(1)), true);
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize_companion(f));
}
BENCHMARK(BM_SymmetrizeCompanion)->Args({2, 12})->Args({3, 8})->Args({5, 6});

void BM_GenerateSet(benchmark::State& state) {
  PrimeModulus const p(static_cast<std::uint64_t>(state.range(0)));
  auto const w = symmetrize_companion(find_irreducible(p, static_cast<std::size_t>(state.range(1)), true));
  for (auto _ : state) benchmark::DoNotOptimize(generate_rep_set(w));
}
BENCHMARK(BM_GenerateSet)->Args({2, 8})->Args({3, 5})->Args({5, 3});

void BM_VerifyLemma1Pairwise(benchmark::State& state) {
  auto const s = mub_set(PrimeModulus(static_cast<std::uint64_t>(state.range(0))),
                         static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma1(s, {.force_pairwise = true}));
}
BENCHMARK(BM_VerifyLemma1Pairwise)->Args({2, 6})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_VerifyMuFull(benchmark::State& state) {
  auto const s = mub_set(PrimeModulus(static_cast<std::uint64_t>(state.range(0))),
                         static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_mu_numeric(s));
}
BENCHMARK(BM_VerifyMuFull)->Args({2, 4})->Args({3, 3})->Args({7, 2})->Unit(benchmark::kMillisecond);

void BM_GraphState(benchmark::State& state) {
  PrimeModulus const p(2);
  auto const n = static_cast<std::size_t>(state.range(0));
  MatZp a(p, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a.set(i, i + 1, 1);
    a.set(i + 1, i, 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(graph_state(a));
}
BENCHMARK(BM_GraphState)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
