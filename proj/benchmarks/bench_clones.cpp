#include <benchmark/benchmark.h>

#include "clonesub/boolfun.hpp"
#include "clonesub/clone.hpp"

using namespace clonesub;

static void BM_ClosureFragment(benchmark::State& state) {
  const auto base = canonicalFunctions(static_cast<CloneId>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(closureFragment(base, 3));
}
BENCHMARK(BM_ClosureFragment)->DenseRange(0, 23, 1);

static void BM_IdentifyClone(benchmark::State& state) {
  const std::vector<BoolFun> base{fns::maj(), fns::neg()};
  for (auto _ : state) benchmark::DoNotOptimize(identifyClone(base));
}
BENCHMARK(BM_IdentifyClone);
