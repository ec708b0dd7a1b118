#include <benchmark/benchmark.h>

#include "clonesub/generator.hpp"
#include "clonesub/semantics.hpp"
#include "clonesub/solvers.hpp"
#include "clonesub/syntax.hpp"

using namespace clonesub;

namespace {

Concept atom(std::int64_t i) { return Concept::atom("A" + std::to_string(i)); }

// A0 ⊓ A1 ⊑ A2, A1 ⊓ A2 ⊑ A3, ...
Problem conjChain(std::int64_t n) {
  Problem p;
  for (std::int64_t i = 0; i < n; ++i) {
    p.tbox.push_back({Concept::op(ops::conj(), {atom(i), atom(i + 1)}), atom(i + 2)});
  }
  p.lhs = Concept::op(ops::conj(), {atom(0), atom(1)});
  p.rhs = atom(n + 1);
  return p;
}

// A0 ⊑ ¬A1, ¬A1 ⊑ A2, ...
Problem literalChain(std::int64_t n) {
  auto lit = [](std::int64_t i) { return i % 2 ? Concept::op(ops::neg(), {atom(i)}) : atom(i); };
  Problem p;
  for (std::int64_t i = 0; i < n; ++i) p.tbox.push_back({lit(i), lit(i + 1)});
  p.lhs = atom(0);
  p.rhs = lit(n);
  return p;
}

// A_i ⊑ ∃r.A_{i+1}, ∃r.A_{i+1} ⊑ B_i, B_i ⊑ A_i ... so every A_i needs its successor.
Problem existsChain(std::int64_t n) {
  Problem p;
  for (std::int64_t i = 0; i < n; ++i) {
    p.tbox.push_back({atom(i), Concept::exists("r", atom(i + 1))});
    p.tbox.push_back({Concept::exists("r", atom(i + 1)), Concept::atom("B" + std::to_string(i))});
  }
  p.lhs = atom(0);
  p.rhs = Concept::atom("B0");
  return p;
}

Problem random(CloneId c, QuantifierSet q, unsigned atoms, unsigned axioms, std::uint64_t seed) {
  GeneratorConfig g;
  g.clone = c;
  g.quantifiers = q;
  g.atoms = atoms;
  g.axioms = axioms;
  g.seed = seed;
  return generateProblem(g);
}

}  // namespace

static void BM_ConjClosure(benchmark::State& state) {
  const auto p = conjChain(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solveQFConjClosure(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConjClosure)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_ImplicationGraph(benchmark::State& state) {
  const auto p = literalChain(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solveQFImplicationGraph(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ImplicationGraph)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_ELCompletion(benchmark::State& state) {
  const auto p = existsChain(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solveELCompletion(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ELCompletion)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_TruthTable(benchmark::State& state) {
  const auto p = random(CloneId::BF, {}, static_cast<unsigned>(state.range(0)), 8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(solveQFTruthTable(p));
}
BENCHMARK(BM_TruthTable)->DenseRange(4, 12, 4);

static void BM_TypeElimination(benchmark::State& state) {
  const auto p = random(CloneId::BF, QuantifierSet::both(), static_cast<unsigned>(state.range(0)),
                        3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(generalSubsumes(p));
}
BENCHMARK(BM_TypeElimination)->DenseRange(2, 5, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
