#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "clonesub/classify.hpp"
#include "clonesub/clone.hpp"
#include "clonesub/concept.hpp"
#include "clonesub/semantics.hpp"

namespace clonesub {

// Every solver throws FragmentError when its precondition fails.

/// Q = ∅ and [B] ⊆ N. Literal implication graph with contrapositive edges;
/// entailment is unsatisfiability of T ∧ C ∧ ¬D as a 2-CNF.
bool solveQFImplicationGraph(const Problem& p);

/// Q = ∅ and [B] ⊆ E. Forward chaining of conjunctive axioms from the atoms
/// of C; yes iff the atoms of D or ⊥ are derived.
bool solveQFConjClosure(const Problem& p);

/// Q = ∅. Truth-table enumeration through propEntails.
bool solveQFTruthTable(const Problem& p);

/// Q ⊆ {∃} and [B] ⊆ E. Completion rules over a normalized TBox.
bool solveELCompletion(const Problem& p);

/// Q ⊆ {∀} and [B] ⊆ V. EL completion on the contraposed instance.
bool solveForallDisj(const Problem& p);

// ---------------------------------------------------------------------------
// Dispatch

enum class Algorithm {
  Auto,
  ImplicationGraph,
  ConjClosure,
  DualConjClosure,
  TruthTable,
  ELCompletion,
  DualEL,
  TypeElimination,
};

std::string_view algorithmName(Algorithm a);
std::optional<Algorithm> algorithmFromName(std::string_view name);

/// Whether `a` accepts instances with these operator functions and quantifiers.
bool algorithmAccepts(Algorithm a, std::span<const BoolFun> functions, QuantifierSet q);

/// The cheapest admissible algorithm, tried in the order implication graph,
/// conjunctive closure, dual conjunctive closure, truth table, EL completion,
/// dual EL and finally type elimination.
Algorithm routeAlgorithm(std::span<const BoolFun> functions, QuantifierSet q);

struct DispatchOptions {
  Algorithm algorithm = Algorithm::Auto;
  bool crosscheck = false;
  bool wantCountermodel = false;
  std::size_t maxDomain = 3;
  TypeEliminationOptions typeElimination{};
};

struct DispatchResult {
  bool subsumed = false;
  Algorithm algorithm = Algorithm::Auto;
  ComplexityLabel label;
  CloneId clone = CloneId::Other;
  QuantifierSet quantifiers;
  std::optional<Interpretation> countermodel;
  /// Why no countermodel was produced when one was requested.
  std::string countermodelNote;
};

/// Classifies p, runs the chosen algorithm and optionally cross-checks it
/// against generalSubsumes. Throws RoutingConflict when a named algorithm
/// does not accept p, and CrosscheckFailure on disagreement.
DispatchResult dispatchSolve(const Problem& p, const DispatchOptions& options = {});

/// Runs one algorithm without classification.
bool runAlgorithm(Algorithm a, const Problem& p, const TypeEliminationOptions& te = {});

}  // namespace clonesub
