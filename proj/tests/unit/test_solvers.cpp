#include <gtest/gtest.h>

#include <random>

#include "clonesub/error.hpp"
#include "clonesub/generator.hpp"
#include "clonesub/reductions.hpp"
#include "clonesub/solvers.hpp"
#include "clonesub/syntax.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace clonesub;

namespace {

Problem gen(CloneId c, QuantifierSet q, std::uint64_t seed, unsigned atoms = 5,
            unsigned axioms = 5) {
  GeneratorConfig g;
  g.clone = c;
  g.quantifiers = q;
  g.atoms = atoms;
  g.axioms = axioms;
  g.depth = 3;
  g.seed = seed;
  return generateProblem(g);
}

}  // namespace

TEST(ImplicationGraph, Examples) {
  EXPECT_TRUE(solveQFImplicationGraph(parseProblem("axiom A <= B\nquery A <= B\n")));
  EXPECT_TRUE(solveQFImplicationGraph(parseProblem("axiom A <= !A\nquery A <= B\n")));
  EXPECT_FALSE(solveQFImplicationGraph(parseProblem("query A <= B\n")));
  EXPECT_TRUE(solveQFImplicationGraph(parseProblem("axiom !B <= B\nquery A <= B\n")));
  EXPECT_TRUE(solveQFImplicationGraph(parseProblem("axiom top <= bot\nquery A <= B\n")));
  EXPECT_THROW(solveQFImplicationGraph(parseProblem("query A & B <= A\n")), FragmentError);
}

TEST(ImplicationGraph, AgreesWithBruteForce) {
  for (CloneId c : {CloneId::N, CloneId::N2, CloneId::I, CloneId::I0, CloneId::I1}) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto p = gen(c, {}, seed);
      ASSERT_EQ(solveQFImplicationGraph(p), oracle::bruteForceEntails(p)) << toString(p);
    }
  }
}

TEST(ImplicationGraph, DecidesGraphReachability) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto g = testrand::graph(rng, 12);
    ASSERT_EQ(solveQFImplicationGraph(gapToSubs(g)), oracle::reachable(g));
  }
}

TEST(ConjClosure, Examples) {
  EXPECT_TRUE(solveQFConjClosure(parseProblem("axiom A & B <= C\nquery A & B <= C\n")));
  EXPECT_FALSE(solveQFConjClosure(parseProblem("axiom A & B <= C\nquery A <= C\n")));
  EXPECT_TRUE(solveQFConjClosure(parseProblem("axiom A <= bot\nquery A & B <= D\n")));
  EXPECT_TRUE(solveQFConjClosure(parseProblem("query A <= top\n")));
  EXPECT_THROW(solveQFConjClosure(parseProblem("query A | B <= A\n")), FragmentError);
}

TEST(ConjClosure, AgreesWithBruteForce) {
  for (CloneId c : {CloneId::E, CloneId::E0, CloneId::E2}) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
      const auto p = gen(c, {}, seed);
      ASSERT_EQ(solveQFConjClosure(p), oracle::bruteForceEntails(p)) << toString(p);
    }
  }
}

TEST(ConjClosure, DualizedDisjunctiveInstancesAgree) {
  for (CloneId c : {CloneId::V, CloneId::V0, CloneId::V2}) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
      const auto p = gen(c, {}, seed);
      ASSERT_EQ(runAlgorithm(Algorithm::DualConjClosure, p), oracle::bruteForceEntails(p))
          << toString(p);
    }
  }
}

TEST(ConjClosure, DecidesHyperpaths) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const auto h = testrand::hypergraph(rng, 12);
    ASSERT_EQ(solveQFConjClosure(hgapToSubs(h)), oracle::hyperReachable(h));
  }
}

TEST(TruthTable, Examples) {
  EXPECT_TRUE(solveQFTruthTable(
      parseProblem("op maj 3 00010111\nquery maj(A, B, C) <= A | B\n")));
  EXPECT_FALSE(solveQFTruthTable(parseProblem("query A ^ B <= A\n")));
  EXPECT_THROW(solveQFTruthTable(parseProblem("query exists r . A <= A\n")), FragmentError);
}

TEST(ELCompletion, Examples) {
  EXPECT_TRUE(solveELCompletion(
      parseProblem("axiom A <= exists r . B\naxiom exists r . B <= C\nquery A <= C\n")));
  EXPECT_TRUE(solveELCompletion(parseProblem("axiom A <= exists r . A\nquery A <= A\n")));
  EXPECT_TRUE(solveELCompletion(parseProblem("axiom A <= bot\nquery A <= B\n")));
  EXPECT_TRUE(solveELCompletion(
      parseProblem("axiom A <= exists r . B\naxiom B <= bot\nquery A <= C\n")));
  EXPECT_FALSE(solveELCompletion(parseProblem("axiom A <= exists r . B\nquery A <= B\n")));
  EXPECT_THROW(solveELCompletion(parseProblem("query forall r . A <= A\n")), FragmentError);
}

TEST(ELCompletion, AgreesWithTypeElimination) {
  for (CloneId c : {CloneId::E, CloneId::E0, CloneId::E2}) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const auto p = gen(c, QuantifierSet::onlyExists(), seed, 4, 4);
      ASSERT_EQ(solveELCompletion(p), generalSubsumes(p)) << toString(p);
    }
  }
}

TEST(DualEL, Examples) {
  EXPECT_TRUE(solveForallDisj(parseProblem("axiom A <= forall r . B\nquery A <= forall r . B\n")));
  EXPECT_FALSE(solveForallDisj(parseProblem("query A | B <= A\n")));
}

TEST(DualEL, AgreesWithTypeElimination) {
  for (CloneId c : {CloneId::V, CloneId::V0, CloneId::V2}) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const auto p = gen(c, QuantifierSet::onlyForall(), seed, 4, 4);
      ASSERT_EQ(solveForallDisj(p), generalSubsumes(p)) << toString(p);
    }
  }
}

TEST(Dispatch, RoutesPerFragment) {
  const auto a = dispatchSolve(parseProblem("axiom A <= B\nquery A <= B\n"));
  EXPECT_TRUE(a.subsumed);
  EXPECT_EQ(a.algorithm, Algorithm::ImplicationGraph);
  EXPECT_EQ(a.label.toString(), "NL-complete");

  const auto b = dispatchSolve(parseProblem("axiom A <= exists r . B\nquery A & B <= exists r . B\n"));
  EXPECT_EQ(b.algorithm, Algorithm::ELCompletion);
  EXPECT_EQ(b.label.toString(), "P-complete");

  const auto c = dispatchSolve(parseProblem("axiom !A <= forall r . B\nquery A <= exists r . B\n"));
  EXPECT_EQ(c.algorithm, Algorithm::TypeElimination);
  EXPECT_EQ(c.label.toString(), "EXPTIME-complete");

  EXPECT_EQ(dispatchSolve(parseProblem("query A | B <= A | B | C\n")).algorithm,
            Algorithm::DualConjClosure);
  EXPECT_EQ(dispatchSolve(parseProblem("query A ^ B <= A\n")).algorithm, Algorithm::TruthTable);
  EXPECT_EQ(dispatchSolve(parseProblem("query forall r . (A | B) <= A\n")).algorithm,
            Algorithm::DualEL);
}

TEST(Dispatch, NamedAlgorithmsMustAcceptTheFragment) {
  DispatchOptions opts;
  opts.algorithm = Algorithm::ELCompletion;
  EXPECT_THROW(dispatchSolve(parseProblem("query forall r . A <= A\n"), opts), RoutingConflict);
  opts.algorithm = Algorithm::TypeElimination;
  EXPECT_TRUE(dispatchSolve(parseProblem("query A <= A\n"), opts).subsumed);
}

TEST(Dispatch, AutoRoutingNeverViolatesPreconditions) {
  for (CloneId c : cloneInventory()) {
    for (const auto& q : allQuantifierSets()) {
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        DispatchOptions opts;
        opts.crosscheck = true;
        opts.wantCountermodel = true;
        const auto p = gen(c, q, seed, 3, 3);
        const auto r = dispatchSolve(p, opts);
        if (r.countermodel) EXPECT_TRUE(isCountermodel(*r.countermodel, p));
      }
    }
  }
}
