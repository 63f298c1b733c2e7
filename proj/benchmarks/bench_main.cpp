#include <benchmark/benchmark.h>

#include <random>

#include "bluher/oracle.hpp"
#include "bluher/solver.hpp"

namespace {

using namespace bluher;

void BM_FieldMul(benchmark::State& state) {
  const Field f = Field::make(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  std::mt19937_64 rng(1);
  Elt x = f.random(rng);
  const Elt y = f.add(f.random(rng), f.one());
  for (auto _ : state) {
    x = f.mul(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Args({2, 6})->Args({2, 18})->Args({5, 12})->Args({3, 64});

void BM_Frobenius(benchmark::State& state) {
  const Field f = Field::make(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  std::mt19937_64 rng(2);
  Elt x = f.random(rng);
  for (auto _ : state) {
    x = f.frobenius(x, 1);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_Frobenius)->Args({2, 18})->Args({5, 12});

void BM_Inverse(benchmark::State& state) {
  const Field f = Field::make(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  std::mt19937_64 rng(3);
  Elt x = f.add(f.random(rng), f.one());
  for (auto _ : state) {
    x = f.inv(x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_Inverse)->Args({2, 18})->Args({5, 12});

// Solves every a of one triple with a shared workspace.
void BM_SolveAll(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  const auto k = static_cast<unsigned>(state.range(1));
  const auto n = static_cast<unsigned>(state.range(2));
  const Field f = Field::make(p, n);
  const SolverWorkspace ws(f, k);
  const std::uint64_t order = f.order_or_throw();
  for (auto _ : state) {
    for (std::uint64_t v = 1; v < order; ++v) benchmark::DoNotOptimize(solve(make_instance(k, f, f.decode(v)), ws));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * (order - 1)));
}
BENCHMARK(BM_SolveAll)->Args({2, 1, 6})->Args({2, 2, 6})->Args({3, 1, 4})->Args({5, 1, 3})->Unit(benchmark::kMillisecond);

void BM_WorkspaceSetup(benchmark::State& state) {
  const Field f = Field::make(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(SolverWorkspace(f, static_cast<unsigned>(state.range(1))));
}
BENCHMARK(BM_WorkspaceSetup)->Args({2, 2, 6})->Args({5, 1, 3})->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const Field f = Field::make(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(census(f, static_cast<unsigned>(state.range(1))));
}
BENCHMARK(BM_Census)->Args({2, 1, 10})->Args({3, 1, 6})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
