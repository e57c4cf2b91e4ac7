#include <benchmark/benchmark.h>

#include <random>

#include "pslab/algebra.hpp"
#include "pslab/fock.hpp"
#include "pslab/ideal.hpp"
#include "pslab/linalg.hpp"
#include "pslab/qseries.hpp"

using namespace pslab;

namespace {

void BM_EnumerateMonomials(benchmark::State& state) {
  const int weight = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int c = 0; c <= weight; ++c) {
      benchmark::DoNotOptimize(enumerate_monomials(weight, c, 1));
    }
  }
}
BENCHMARK(BM_EnumerateMonomials)->Arg(12)->Arg(18);

void BM_RelationGenerator(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(relation_generator(level, 3 * level, 0));
  }
}
BENCHMARK(BM_RelationGenerator)->Arg(2)->Arg(4);

void BM_EvaluateMonomial(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const Monomial m({3, 3, 2, 1, 1});
  const ModuleConfig cfg(level, 0);
  for (auto _ : state) {
    Evaluator ev(cfg);  // fresh cache: measures the real evaluation cost
    benchmark::DoNotOptimize(ev.monomial_image(m));
  }
}
BENCHMARK(BM_EvaluateMonomial)->Arg(1)->Arg(2)->Arg(3);

void BM_KernelPiece(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const ModuleConfig cfg(level, 0);
  Evaluator ev(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_piece(cfg, 10, 4, &ev));
  }
}
BENCHMARK(BM_KernelPiece)->Arg(1)->Arg(2)->Arg(3);

void BM_IdealPiece(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ideal_piece(level, 0, 12, 5));
  }
}
BENCHMARK(BM_IdealPiece)->Arg(1)->Arg(2)->Arg(3);

void BM_Rref(benchmark::State& state) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> val(-9, 9);
  const int n = static_cast<int>(state.range(0));
  SparseMatrix m(n);
  for (int i = 0; i < n; ++i) {
    SparseRow r;
    for (int j = 0; j < n; ++j) {
      if (rng() % 3 == 0) r.emplace_back(j, Rational(val(rng)));
    }
    m.add_row(std::move(r));
  }
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(32)->Arg(96);

void BM_FermionicSum(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fermionic_sum(level, 0, 14));
  }
}
BENCHMARK(BM_FermionicSum)->Arg(2)->Arg(3);

void BM_DimensionTable(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dimension_table(level, 0, 8));
  }
}
BENCHMARK(BM_DimensionTable)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
