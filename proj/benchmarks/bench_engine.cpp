#include <benchmark/benchmark.h>

#include <random>

#include "qcov/obstruction.hpp"
#include "qcov/random.hpp"
#include "qcov/tensor.hpp"

using namespace qcov;

static void BM_WordProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  RandomSpec spec;
  std::vector<Element> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(random_element(rng, n, spec));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i % 64] * xs[(i + 7) % 64]);
    ++i;
  }
}
BENCHMARK(BM_WordProduct)->Arg(1)->Arg(2)->Arg(4);

static void BM_Delta(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const Element x = Element::monomial(1, Word{len, len, len});
  for (auto _ : state) benchmark::DoNotOptimize(delta(x));
}
BENCHMARK(BM_Delta)->Arg(1)->Arg(2)->Arg(3);

static void BM_ObstructionPower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GradedCandidate x = GradedCandidate::canonical(n);
  for (auto _ : state) benchmark::DoNotOptimize(power_compare(x));
}
BENCHMARK(BM_ObstructionPower)->DenseRange(2, 5);

BENCHMARK_MAIN();
