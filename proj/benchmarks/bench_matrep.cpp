#include <benchmark/benchmark.h>

#include "qcov/matrep.hpp"

using namespace qcov;

static void BM_Build(benchmark::State& state) {
  const int fock = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(MatrixRep::build(0.5, 2, fock, 8));
}
BENCHMARK(BM_Build)->Arg(16)->Arg(64)->Arg(256);

static void BM_CheckRelations(benchmark::State& state) {
  const MatrixRep rep = MatrixRep::build(0.5, 2, static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(check_relations(rep));
}
BENCHMARK(BM_CheckRelations)->Arg(16)->Arg(64);
