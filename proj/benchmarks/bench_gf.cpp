#include <benchmark/benchmark.h>

#include <random>

#include "flagpath/construct.hpp"
#include "flagpath/gf.hpp"

using namespace flagpath;

namespace {

Matrix random_matrix(std::uint32_t q, std::size_t rows, std::size_t cols) {
  std::mt19937 rng(42);
  PrimeField f(q);
  std::uniform_int_distribution<std::uint32_t> entry(0, q - 1);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, std::uint16_t(entry(rng)));
  }
  return m;
}

}  // namespace

static void BM_RrefGF2(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  Matrix m = random_matrix(2, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m));
  }
}
BENCHMARK(BM_RrefGF2)->Arg(32)->Arg(64)->Arg(128);

static void BM_RrefLargePrime(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  Matrix m = random_matrix(65521, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m));
  }
}
BENCHMARK(BM_RrefLargePrime)->Arg(32)->Arg(64)->Arg(128);

static void BM_StackRank(benchmark::State& state) {
  Matrix a = random_matrix(5, 8, 16);
  Matrix b = random_matrix(5, 8, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stack_rank(a, b));
  }
}
BENCHMARK(BM_StackRank);

static void BM_Realize(benchmark::State& state) {
  const std::uint32_t q = std::uint32_t(state.range(0));
  DistanceVector v({1, 2, 3, 2, 2, 1});  // n = 7
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize(v, q));
  }
}
BENCHMARK(BM_Realize)->Arg(2)->Arg(3)->Arg(5);
