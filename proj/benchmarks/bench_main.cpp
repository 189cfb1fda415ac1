// Copyright 2026 The minitwistor Authors
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

#include "mtf/catalog.hpp"
#include "mtf/invariants.hpp"
#include "mtf/minitwistor.hpp"

namespace {

void BM_ProcedureA_Fibonacci(benchmark::State& state) {
  const auto seq = mtf::family_fibonacci(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mtf::procedure_a(seq));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProcedureA_Fibonacci)->DenseRange(4, 12, 4);

void BM_ExpandLevel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto workers = static_cast<std::size_t>(state.range(1));
  const auto parents = mtf::enumerate_marked(n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(mtf::expand_level(parents, workers));
  state.counters["children"] = static_cast<double>(mtf::enumerate_marked(n).size());
}
BENCHMARK(BM_ExpandLevel)->Args({8, 1})->Args({10, 1})->Args({10, 2})->Unit(benchmark::kMillisecond);

void BM_U1Classes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mtf::u1_classes(n).delta());
}
BENCHMARK(BM_U1Classes)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RhsPolynomial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto lvec = mtf::l_vector(mtf::family_fibonacci(n));
  const auto lambdas = mtf::ConformalInvariant::standard(n);
  for (auto _ : state) benchmark::DoNotOptimize(mtf::rhs_polynomial(lvec, lambdas, 1));
  state.counters["degree"] = static_cast<double>(2 * lvec.m());
}
BENCHMARK(BM_RhsPolynomial)->DenseRange(4, 10, 2);

void BM_QuadraticSplit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto lvec = mtf::l_vector(mtf::family_fibonacci(n));
  const auto form = mtf::rhs_polynomial(lvec, mtf::ConformalInvariant::standard(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(mtf::quadratic_split(form, lvec.m()).pullback());
}
BENCHMARK(BM_QuadraticSplit)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
