#include <array>

#include "clonesub/error.hpp"
#include "clonesub/solvers.hpp"
#include "clonesub/syntax.hpp"

namespace clonesub {

namespace {

struct AlgorithmInfo {
  Algorithm id;
  std::string_view name;
};

constexpr std::array<AlgorithmInfo, 8> kAlgorithms{{
    {Algorithm::Auto, "auto"},
    {Algorithm::ImplicationGraph, "implication-graph"},
    {Algorithm::ConjClosure, "conj-closure"},
    {Algorithm::DualConjClosure, "dual-conj-closure"},
    {Algorithm::TruthTable, "truth-table"},
    {Algorithm::ELCompletion, "el-completion"},
    {Algorithm::DualEL, "dual-el"},
    {Algorithm::TypeElimination, "type-elimination"},
}};

// Routing order, cheapest first.
constexpr std::array<Algorithm, 7> kRouteOrder{
    Algorithm::ImplicationGraph, Algorithm::ConjClosure, Algorithm::DualConjClosure,
    Algorithm::TruthTable,       Algorithm::ELCompletion, Algorithm::DualEL,
    Algorithm::TypeElimination,
};

}  // namespace

std::string_view algorithmName(Algorithm a) {
  for (const auto& info : kAlgorithms) {
    if (info.id == a) return info.name;
  }
  return "?";
}

std::optional<Algorithm> algorithmFromName(std::string_view name) {
  for (const auto& info : kAlgorithms) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

bool algorithmAccepts(Algorithm a, std::span<const BoolFun> fs, QuantifierSet q) {
  switch (a) {
    case Algorithm::Auto: return true;
    case Algorithm::ImplicationGraph: return q.empty() && cloneSubset(fs, CloneId::N);
    case Algorithm::ConjClosure: return q.empty() && cloneSubset(fs, CloneId::E);
    case Algorithm::DualConjClosure: return q.empty() && cloneSubset(fs, CloneId::V);
    case Algorithm::TruthTable: return q.empty();
    case Algorithm::ELCompletion: return !q.forall && cloneSubset(fs, CloneId::E);
    case Algorithm::DualEL: return !q.exists && cloneSubset(fs, CloneId::V);
    case Algorithm::TypeElimination: return true;
  }
  return false;
}

Algorithm routeAlgorithm(std::span<const BoolFun> fs, QuantifierSet q) {
  for (Algorithm a : kRouteOrder) {
    if (algorithmAccepts(a, fs, q)) return a;
  }
  return Algorithm::TypeElimination;
}

bool runAlgorithm(Algorithm a, const Problem& p, const TypeEliminationOptions& te) {
  switch (a) {
    case Algorithm::ImplicationGraph: return solveQFImplicationGraph(p);
    case Algorithm::ConjClosure: return solveQFConjClosure(p);
    case Algorithm::DualConjClosure: {
      const auto fs = p.signature().functions();
      if (!cloneSubset(fs, CloneId::V)) {
        throw FragmentError("dual conjunctive closure needs operators inside V");
      }
      return solveQFConjClosure(dualizeInstance(p));
    }
    case Algorithm::TruthTable: return solveQFTruthTable(p);
    case Algorithm::ELCompletion: return solveELCompletion(p);
    case Algorithm::DualEL: return solveForallDisj(p);
    case Algorithm::TypeElimination: return generalSubsumes(p, te);
    case Algorithm::Auto: break;
  }
  throw Error("runAlgorithm needs a concrete algorithm");
}

DispatchResult dispatchSolve(const Problem& p, const DispatchOptions& options) {
  const auto sig = p.signature();
  const auto fs = sig.functions();
  const auto fragment = closureFragment(fs, 3);

  DispatchResult r;
  r.quantifiers = sig.quantifiers;
  r.clone = identifyClone(fs, fragment);
  r.label = complexityLabel(fs, sig.quantifiers);

  if (options.algorithm == Algorithm::Auto) {
    r.algorithm = routeAlgorithm(fs, sig.quantifiers);
  } else {
    if (!algorithmAccepts(options.algorithm, fs, sig.quantifiers)) {
      throw RoutingConflict("algorithm " + std::string(algorithmName(options.algorithm)) +
                            " does not accept clone " + std::string(cloneName(r.clone)) +
                            " with quantifiers " + sig.quantifiers.toString());
    }
    r.algorithm = options.algorithm;
  }
  r.subsumed = runAlgorithm(r.algorithm, p, options.typeElimination);

  if (options.crosscheck) {
    const bool reference = r.algorithm == Algorithm::TypeElimination && sig.quantifiers.empty()
                               ? propEntails(p)
                               : generalSubsumes(p, options.typeElimination);
    if (reference != r.subsumed) {
      throw CrosscheckFailure(std::string(algorithmName(r.algorithm)) + " answered " +
                              (r.subsumed ? "subsumed" : "not-subsumed") +
                              " but the reference decider disagrees");
    }
  }

  if (options.wantCountermodel && !r.subsumed) {
    try {
      r.countermodel = sig.quantifiers.empty() ? propCountermodel(p)
                                               : boundedRefute(p, options.maxDomain);
      if (!r.countermodel) {
        r.countermodelNote =
            "none with at most " + std::to_string(options.maxDomain) + " elements";
      }
    } catch (const ResourceError& e) {
      r.countermodelNote = e.what();
    }
  }
  return r;
}

}  // namespace clonesub
