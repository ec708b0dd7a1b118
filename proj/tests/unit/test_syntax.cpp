#include <gtest/gtest.h>

#include "clonesub/error.hpp"
#include "clonesub/generator.hpp"
#include "clonesub/syntax.hpp"
#include "oracles.hpp"

using namespace clonesub;

TEST(Parser, ReadsAxiomsQueryAndOperators) {
  const auto p = parseProblem(
      "% comment\n"
      "op imp 2 1101\n"
      "axiom imp(A, B) <= C   % trailing comment\n"
      "equiv D == exists r . A\n"
      "query A & B <= C | !D\n");
  ASSERT_EQ(p.tbox.size(), 3U);
  EXPECT_EQ(p.tbox[0].lhs.op().name, "imp");
  EXPECT_EQ(p.tbox[1].rhs.kind(), Concept::Kind::Exists);
  EXPECT_EQ(p.tbox[2].lhs.kind(), Concept::Kind::Exists);
  EXPECT_EQ(p.rhs.op().name, "or");
  EXPECT_EQ(p.atoms(), (std::set<std::string>{"A", "B", "C", "D"}));
  EXPECT_EQ(p.roles(), (std::set<std::string>{"r"}));
}

TEST(Parser, PrecedenceIsBarCaretAmpUnary) {
  const auto c = parseConcept("A | B ^ C & !D");
  EXPECT_EQ(toString(c), "or(A, xor(B, and(C, not(D))))");
  EXPECT_EQ(toString(parseConcept("exists r . A & B")), "and(exists r . A, B)");
  EXPECT_EQ(toString(parseConcept("forall r . (A | B)")), "forall r . or(A, B)");
}

TEST(Parser, ConstantsAreZeroAryOperators) {
  const auto c = parseConcept("top & bot");
  EXPECT_EQ(c.children()[0].op().fun, fns::top());
  EXPECT_EQ(c.children()[1].op().arity(), 0U);
}

TEST(Parser, ReportsPositions) {
  try {
    parseProblem("axiom A <= B\nquery A <= and(B)\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_GT(e.column(), 0U);
  }
  EXPECT_THROW(parseProblem("axiom A <= B\n"), ParseError);           // no query
  EXPECT_THROW(parseProblem("query A <= B\nquery B <= A\n"), ParseError);
  EXPECT_THROW(parseProblem("query frob(A) <= B\n"), ParseError);     // unknown op
  EXPECT_THROW(parseProblem("query A <= and\n"), ParseError);          // missing args
  EXPECT_THROW(parseProblem("op f 2 011\nquery A <= B\n"), ParseError);
  EXPECT_THROW(parseProblem("op and 2 0111\nquery A <= B\n"), Error);  // conflicting table
  EXPECT_THROW(parseProblem("query A $ B <= B\n"), ParseError);
}

TEST(Parser, DeclaredQuantifiersMustCoverUsedOnes) {
  EXPECT_THROW(parseProblem("quantifiers none\nquery exists r . A <= B\n"), ParseError);
  const auto p = parseProblem("quantifiers both\nquery A <= B\n");
  EXPECT_EQ(p.signature().quantifiers, QuantifierSet::both());
  const auto q = parseProblem("quantifiers auto\nquery forall r . A <= B\n");
  EXPECT_EQ(q.signature().quantifiers, QuantifierSet::onlyForall());
}

TEST(Parser, PrintedProblemsParseBack) {
  for (CloneId c : cloneInventory()) {
    GeneratorConfig g;
    g.clone = c;
    g.quantifiers = QuantifierSet::both();
    g.seed = 11;
    const auto p = generateProblem(g);
    EXPECT_EQ(parseProblem(toString(p)), p) << cloneName(c);
  }
}

TEST(Transforms, NnfNegationDualizesOperators) {
  EXPECT_EQ(toString(nnfNeg(parseConcept("A & exists r . B"))), "or(not(A), forall r . not(B))");
  EXPECT_EQ(nnfNeg(Concept::atom("A")).kind(), Concept::Kind::NegAtom);
  EXPECT_EQ(nnfNeg(Concept::top()).op().fun, fns::bot());
  const Operator maj{"maj", fns::maj()};
  EXPECT_EQ(dualOperator(maj), maj);
  const Operator s00{"s00", BoolFun::fromString("00011111")};
  EXPECT_EQ(dualOperator(s00).name, "dual_s00");
  EXPECT_EQ(dualOperator(dualOperator(s00)), s00);
}

TEST(Transforms, NnfNegationIsPointwiseComplement) {
  const auto c = parseConcept("xor(A, B) | !(C & A)");
  const auto n = nnfNeg(c);
  for (int m = 0; m < 8; ++m) {
    std::map<std::string, bool> v{{"A", (m & 1) != 0}, {"B", (m & 2) != 0}, {"C", (m & 4) != 0}};
    EXPECT_NE(oracle::evalPoint(c, v), oracle::evalPoint(n, v));
  }
}

TEST(Transforms, ContrapositionRenamesNegatedAtomsWithoutNegation) {
  const auto p = parseProblem("axiom A & B <= C\nquery A <= C\n");
  const auto d = dualizeInstance(p);
  // Dual of ∧ is ∨; ¬A becomes the fresh atom A′.
  EXPECT_EQ(toString(d.tbox[0].lhs), "C′");
  EXPECT_EQ(toString(d.tbox[0].rhs), "or(A′, B′)");
  EXPECT_EQ(toString(d.lhs), "C′");
  EXPECT_EQ(toString(d.rhs), "A′");
  const auto withNeg = dualizeInstance(parseProblem("query !A <= B\n"));
  EXPECT_EQ(withNeg.lhs.kind(), Concept::Kind::NegAtom);
}

TEST(Transforms, FreshNamesAvoidTakenOnes) {
  EXPECT_EQ(freshName("A", {"A", "A′"}), "A′′");
}
