#include "chowkit/equivariant.hpp"
#include "chowkit/graded_ideal.hpp"
#include "chowkit/hyperelliptic.hpp"
#include "chowkit/lattice.hpp"
#include "chowkit/poly.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace chowkit;

IntMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
  }
  return m;
}

void BM_PolyMul(benchmark::State& state) {
  RingPtr ring = even_target_ring();
  Polynomial t0 = Polynomial::variable(ring, "T0");
  Polynomial t1 = Polynomial::variable(ring, "T1");
  Polynomial f = (t0 + t1).pow(static_cast<unsigned>(state.range(0)));
  Polynomial g = (t0 - t1).pow(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8)->Arg(16);

void BM_Hnf(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)),
                              static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnf(m));
  }
}
BENCHMARK(BM_Hnf)->Arg(8)->Arg(16)->Arg(32);

void BM_Snf(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)),
                              static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(snf(m));
  }
}
BENCHMARK(BM_Snf)->Arg(6)->Arg(12);

void BM_DegreePiece(benchmark::State& state) {
  GradedIdeal ideal = stated_presentation(2).relations;
  long d = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(degree_piece(ideal, d));
  }
}
BENCHMARK(BM_DegreePiece)->Arg(5)->Arg(10)->Arg(20);

void BM_VerifyEven(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(2, state.range(0)));
  }
}
BENCHMARK(BM_VerifyEven)->Arg(10)->Arg(20);

void BM_VerifyOdd(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(3, state.range(0)));
  }
}
BENCHMARK(BM_VerifyOdd)->Arg(10)->Arg(20);

} // namespace

BENCHMARK_MAIN();
