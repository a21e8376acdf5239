#include <benchmark/benchmark.h>

#include "shades/classify.hpp"
#include "shades/enumerate.hpp"

using namespace shades;

static void BM_EnumerateN4(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_basic_shades({.n = 4}));
}
BENCHMARK(BM_EnumerateN4);

static void BM_EnumerateN5(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_basic_shades({.n = 5}));
}
BENCHMARK(BM_EnumerateN5);

static void BM_EnumerateN6Pruned(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_basic_shades(
        {.n = 6, .workers = static_cast<unsigned>(state.range(0)), .pruning = true}));
}
BENCHMARK(BM_EnumerateN6Pruned)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_CanonicalMin(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  MatrixBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int v = ((i + 2 * j) % 5) - 2;
      b.set(i, j, v);
      b.set(j, i, -v);
    }
  auto m = b.matrix();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_min(m));
}
BENCHMARK(BM_CanonicalMin)->Arg(5)->Arg(6)->Arg(7);

static void BM_OrbitHasSmaller(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  MatrixBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int v = ((i + 2 * j) % 5) - 2;
      b.set(i, j, v);
      b.set(j, i, -v);
    }
  auto m = b.matrix();
  for (auto _ : state) benchmark::DoNotOptimize(orbit_has_smaller(m, m));
}
BENCHMARK(BM_OrbitHasSmaller)->Arg(5)->Arg(6)->Arg(7);

static void BM_ClassifyAllN5(benchmark::State& state) {
  auto list = enumerate_basic_shades({.n = 5});
  for (auto _ : state)
    for (auto& m : list) benchmark::DoNotOptimize(classify(m));
}
BENCHMARK(BM_ClassifyAllN5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
