#include <benchmark/benchmark.h>

#include "flagpath/bijection.hpp"
#include "flagpath/motzkin.hpp"

using namespace flagpath;

static void BM_MotzkinNumber(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    BigInt m = motzkin_number(n);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MotzkinNumber)->Arg(64)->Arg(256)->Arg(1024);

static void BM_AreaCount(benchmark::State& state) {
  const int n = int(state.range(0));
  const std::int64_t k = std::int64_t(n) * n / 8;
  for (auto _ : state) {
    BigInt t = area_count(n, k);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_AreaCount)->Arg(16)->Arg(32)->Arg(64);

static void BM_EnumeratePaths(benchmark::State& state) {
  const int n = int(state.range(0));
  long count = 0;
  for (auto _ : state) {
    count = 0;
    for_each_path(n, PathClass::All, std::nullopt, [&](const MotzkinWord&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_EnumeratePaths)->Arg(10)->Arg(12)->Arg(14);

static void BM_RoundTrip(benchmark::State& state) {
  const int n = int(state.range(0));
  std::vector<MotzkinWord> words = enumerate_paths(n);
  for (auto _ : state) {
    for (const MotzkinWord& w : words) {
      benchmark::DoNotOptimize(psi(phi(w)));
    }
  }
  state.SetItemsProcessed(state.iterations() * long(words.size()));
}
BENCHMARK(BM_RoundTrip)->Arg(8)->Arg(10);
