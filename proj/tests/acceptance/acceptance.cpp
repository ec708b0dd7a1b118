// Acceptance driver: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "clonesub/boolfun.hpp"
#include "clonesub/classify.hpp"
#include "clonesub/clone.hpp"
#include "clonesub/error.hpp"
#include "clonesub/generator.hpp"
#include "clonesub/reductions.hpp"
#include "clonesub/semantics.hpp"
#include "clonesub/solvers.hpp"
#include "clonesub/syntax.hpp"
#include "label_table.hpp"
#include "oracles.hpp"
#include "random.hpp"
#include "table1.hpp"

using namespace clonesub;

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Tally {
  std::size_t total = 0, agree = 0;
  std::string firstFailure;

  void check(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++agree;
    } else if (firstFailure.empty()) {
      firstFailure = what;
    }
  }
  bool allAgree() const { return total > 0 && agree == total; }
  std::string summary() const {
    std::string s = std::to_string(agree) + "/" + std::to_string(total);
    if (!firstFailure.empty()) s += "; first failure: " + firstFailure;
    return s;
  }
};

bool report(int n, bool ok, const std::string& what, double secs) {
  std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", n, what.c_str(), secs);
  std::fflush(stdout);
  return ok;
}

Problem gen(CloneId c, QuantifierSet q, std::uint64_t seed, unsigned atoms, unsigned axioms,
            unsigned depth = 2, unsigned roleDepth = 2) {
  GeneratorConfig g;
  g.clone = c;
  g.quantifiers = q;
  g.atoms = atoms;
  g.axioms = axioms;
  g.depth = depth;
  g.roleDepth = roleDepth;
  g.seed = seed;
  return generateProblem(g);
}

// The decider for an arbitrary instance: brute force without quantifiers,
// type elimination otherwise.
bool decide(const Problem& p) {
  return p.signature().quantifiers.empty() ? propEntails(p) : generalSubsumes(p);
}

// ---------------------------------------------------------------------------

bool criterion1() {
  const auto t = Clock::now();
  Tally tally;
  for (const auto& e : table1::entries()) {
    const CloneId got = identifyClone(e.base);
    tally.check(got == e.clone, std::string(cloneName(e.clone)) + " identified as " +
                                    std::string(cloneName(got)));
  }
  const bool ok = tally.allAgree() && tally.total == 22 && secondsSince(t) < 1.0;
  return report(1, ok, "table bases identified " + tally.summary(), secondsSince(t));
}

bool criterion2() {
  const auto t = Clock::now();
  Tally tally;
  const auto qs = allQuantifierSets();
  for (const auto& row : labels::kRows) {
    const auto c = cloneFromName(row.clone);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const std::string where = std::string(row.clone) + "/" + qs[i].toString();
      if (!c) {
        tally.check(false, where + " unknown clone");
        continue;
      }
      const auto got = complexityLabel(*c, qs[i]).toString();
      tally.check(got == row.cells[i], where + " gave " + got);
    }
  }
  const bool ok = tally.allAgree() && tally.total >= 96;
  return report(2, ok, "classification cells " + tally.summary(), secondsSince(t));
}

bool criterion3() {
  const auto t = Clock::now();
  struct Family {
    std::string name;
    std::vector<CloneId> clones;
  };
  const std::vector<Family> families{
      {"N", {CloneId::N, CloneId::N2}},
      {"E", {CloneId::E, CloneId::E0, CloneId::E2}},
      {"V", {CloneId::V, CloneId::V0, CloneId::V2}},
      {"S/D/L",
       {CloneId::S00, CloneId::S10, CloneId::D1, CloneId::D2, CloneId::L, CloneId::L0,
        CloneId::L1, CloneId::L2, CloneId::L3}},
  };
  Tally tally;
  std::map<std::string, std::size_t> routes;
  for (const auto& fam : families) {
    for (std::uint64_t i = 0; i < 500; ++i) {
      const auto p = gen(fam.clones[i % fam.clones.size()], {}, 1000 + i, 1 + i % 8, i % 11, 3);
      const auto r = dispatchSolve(p);
      ++routes[std::string(algorithmName(r.algorithm))];
      const bool expected = propEntails(p);
      tally.check(r.subsumed == expected && expected == oracle::bruteForceEntails(p),
                  fam.name + ": " + toString(p));
    }
  }
  const double secs = secondsSince(t);
  std::string via;
  for (const auto& [name, n] : routes) via += " " + name + "=" + std::to_string(n);
  return report(3, tally.allAgree() && secs < 60.0,
                "quantifier-free solvers vs propEntails " + tally.summary() + ";" + via, secs);
}

bool criterion4() {
  const auto t = Clock::now();
  Tally tally;
  std::size_t refuted = 0, inconclusive = 0;
  auto run = [&](Algorithm a, CloneId c, QuantifierSet q, std::uint64_t seed) {
    const auto p = gen(c, q, seed, 1 + seed % 6, seed % 7, 3, 1 + seed % 3);
    const bool general = generalSubsumes(p);
    tally.check(runAlgorithm(a, p) == general,
                std::string(algorithmName(a)) + ": " + toString(p));
    try {
      if (const auto m = boundedRefute(p, 3)) {
        ++refuted;
        tally.check(!general && isCountermodel(*m, p), "refuter contradicts: " + toString(p));
      }
    } catch (const ResourceError&) {
      ++inconclusive;
    }
  };
  const CloneId es[] = {CloneId::E, CloneId::E0, CloneId::E2};
  const CloneId vs[] = {CloneId::V, CloneId::V0, CloneId::V2};
  for (std::uint64_t i = 0; i < 200; ++i) {
    run(Algorithm::ELCompletion, es[i % 3], QuantifierSet::onlyExists(), 2000 + i);
    run(Algorithm::DualEL, vs[i % 3], QuantifierSet::onlyForall(), 3000 + i);
  }
  return report(4, tally.allAgree(),
                "EL/dual-EL vs type elimination " + tally.summary() + "; refuter found " +
                    std::to_string(refuted) + " countermodels, " + std::to_string(inconclusive) +
                    " budget exhaustions",
                secondsSince(t));
}

PropFormula randomFormula(std::mt19937_64& rng, unsigned depth) {
  const auto pick = testrand::below(rng, 10);
  if (depth == 0 || pick < 3) {
    if (pick == 0) return PropFormula::constant(testrand::below(rng, 2) == 0);
    return PropFormula::var("x" + std::to_string(testrand::below(rng, 4)));
  }
  static const Operator* pool[] = {&ops::conj(), &ops::disj(), &ops::neg(), &ops::exclusiveOr()};
  const Operator& op = *pool[testrand::below(rng, 4)];
  std::vector<PropFormula> args;
  for (unsigned i = 0; i < op.arity(); ++i) args.push_back(randomFormula(rng, depth - 1));
  return PropFormula::apply(op, std::move(args));
}

bool criterion5() {
  const auto t = Clock::now();
  std::map<std::string, Tally> per;
  std::mt19937_64 rng(5);
  const std::vector<Operator> targets[] = {{ops::conj(), ops::neg()}, {ops::disj(), ops::neg()}};
  const CloneId bcSources[] = {CloneId::E, CloneId::V, CloneId::N, CloneId::D2, CloneId::L2,
                               CloneId::M0};
  const CloneId latticeSources[] = {CloneId::M0, CloneId::M1};
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::uint64_t seed = 5000 + i;
    const QuantifierSet q = i % 2 ? QuantifierSet::both() : QuantifierSet::none();
    const std::string id = " seed " + std::to_string(seed);

    const auto bc = gen(bcSources[i % 6], i % 4 == 1 ? QuantifierSet::onlyExists() : QuantifierSet{},
                        seed, 3, 3);
    per["base-change"].check(decide(baseChange(bc, targets[i % 2])) == decide(bc), toString(bc));

    const auto bf = gen(CloneId::BF, q, seed, 3, 3);
    const bool bfAnswer = decide(bf);
    per["contraposition"].check(decide(dualizeInstance(bf)) == bfAnswer, toString(bf));

    const auto n = gen(CloneId::N, q, seed, 3, 3);
    per["constants-neg"].check(
        decide(simulateConstants(n, ConstantMode::ViaNegation)) == decide(n), toString(n));

    const auto m = gen(latticeSources[i % 2], q, seed, 3, 3);
    per["constants-lattice"].check(
        decide(simulateConstants(m, ConstantMode::ViaLatticeOps)) == decide(m), toString(m));

    const auto phi = randomFormula(rng, 3), psi = randomFormula(rng, 3);
    per["imp-to-subs"].check(propEntails(impToSubs(phi, psi)) == oracle::formulaEntails(phi, psi),
                             "formula pair" + id);

    const auto inst = subsToCoTcsat(bf);
    per["subs-to-cotcsat"].check(!tcsatTypeElim(inst.tbox, inst.target) == bfAnswer, toString(bf));

    const auto other = gen(CloneId::BF, QuantifierSet::both(), seed + 100000, 3, 3);
    const TcsatInstance co{other.tbox, other.lhs};
    per["cotcsat-to-subs"].check(generalSubsumes(coTcsatToSubs(co)) == !tcsatTypeElim(co.tbox, co.target),
                                 toString(other));

    const auto g = testrand::graph(rng, 12);
    per["gap"].check(dispatchSolve(gapToSubs(g)).subsumed == oracle::reachable(g), toString(g));
    const auto h = testrand::hypergraph(rng, 12);
    per["hgap"].check(dispatchSolve(hgapToSubs(h)).subsumed == oracle::hyperReachable(h),
                      toString(h));
  }
  bool ok = per.size() == 9;
  std::string summary;
  for (const auto& [name, tally] : per) {
    ok = ok && tally.allAgree() && tally.total == 200;
    summary += " " + name + "=" + tally.summary();
  }
  return report(5, ok, "reductions preserve answers;" + summary, secondsSince(t));
}

bool criterion6() {
  const auto t = Clock::now();
  std::mt19937_64 rng(6);
  Tally graphs, hypergraphs;
  for (int i = 0; i < 200; ++i) {
    const auto g = testrand::graph(rng, 12);
    graphs.check(solveQFImplicationGraph(gapToSubs(g)) == oracle::reachable(g), toString(g));
    const auto h = testrand::hypergraph(rng, 12);
    hypergraphs.check(solveQFConjClosure(hgapToSubs(h)) == oracle::hyperReachable(h), toString(h));
  }
  return report(6, graphs.allAgree() && hypergraphs.allAgree(),
                "graphs " + graphs.summary() + ", hypergraphs " + hypergraphs.summary(),
                secondsSince(t));
}

bool criterion7() {
  const auto t = Clock::now();
  Tally involution, table, doubled;
  for (unsigned arity = 0; arity <= 3; ++arity) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (1u << arity)); ++bits) {
      const BoolFun f(arity, bits);
      involution.check(f.dual().dual() == f && f.dual().dual().arity() == arity, f.toString());
    }
  }
  // Dual pairs written out by hand; clones not listed are self-dual, except
  // E0 and V0 whose duals lie outside the inventory.
  const std::map<std::string, std::string> pairs{
      {"E", "V"},   {"E2", "V2"}, {"S00", "S10"}, {"M0", "M1"},
      {"L0", "L1"}, {"I0", "I1"}, {"E0", "OTHER"}, {"V0", "OTHER"}};
  for (CloneId c : cloneInventory()) {
    const std::string name(cloneName(c));
    std::string expect = name;
    for (const auto& [a, b] : pairs) {
      if (a == name) expect = b;
      if (b == name && a != "E0" && a != "V0") expect = a;
    }
    std::vector<BoolFun> dual;
    for (const auto& f : canonicalFunctions(c)) dual.push_back(f.dual());
    const std::string byTable(cloneName(dualClone(c)));
    const std::string byFunctions(cloneName(identifyClone(dual)));
    table.check(byTable == expect && byFunctions == expect,
                name + ": table " + byTable + ", functions " + byFunctions);
  }
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto p = gen(CloneId::BF, i % 2 ? QuantifierSet::both() : QuantifierSet::none(),
                       7000 + i, 3, 3);
    doubled.check(decide(dualizeInstance(dualizeInstance(p))) == decide(p), toString(p));
  }
  return report(7, involution.allAgree() && table.allAgree() && doubled.allAgree(),
                "involution " + involution.summary() + ", duality table " + table.summary() +
                    ", double dualization " + doubled.summary(),
                secondsSince(t));
}

bool criterion8() {
  const std::size_t n = 10000;
  auto atom = [](std::size_t i) { return Concept::atom("A" + std::to_string(i)); };

  // A0 ⊓ A1 ⊑ A2, A1 ⊓ A2 ⊑ A3, ...: a derivation chain through every axiom.
  Problem e2;
  for (std::size_t i = 0; i < n; ++i) {
    e2.tbox.push_back({Concept::op(ops::conj(), {atom(i), atom(i + 1)}), atom(i + 2)});
  }
  e2.lhs = Concept::op(ops::conj(), {atom(0), atom(1)});
  e2.rhs = atom(n + 1);
  auto t = Clock::now();
  const bool e2Answer = solveQFConjClosure(e2);
  const double e2Secs = secondsSince(t);

  // A0 ⊑ ¬A1, ¬A1 ⊑ A2, A2 ⊑ ¬A3, ...: alternating literals.
  Problem nn;
  auto lit = [&](std::size_t i) {
    return i % 2 ? Concept::op(ops::neg(), {atom(i)}) : atom(i);
  };
  for (std::size_t i = 0; i < n; ++i) nn.tbox.push_back({lit(i), lit(i + 1)});
  nn.lhs = atom(0);
  nn.rhs = lit(n);
  t = Clock::now();
  const bool nAnswer = solveQFImplicationGraph(nn);
  const double nSecs = secondsSince(t);

  // Type elimination on every generated instance whose closure has at most
  // twelve subconcepts.
  double worst = 0;
  std::size_t timed = 0, largest = 0;
  for (std::uint64_t seed = 1; timed < 50 && seed < 5000; ++seed) {
    const auto p = gen(CloneId::BF, QuantifierSet::both(), 8000 + seed, 3, 2, 2, 2);
    const auto target = Concept::op(ops::conj(), {p.lhs, nnfNeg(p.rhs)});
    TypeEliminationStats stats;
    t = Clock::now();
    tcsatTypeElim(p.tbox, target, {}, &stats);
    const double secs = secondsSince(t);
    if (stats.closureSize > 12) continue;
    ++timed;
    largest = std::max(largest, stats.closureSize);
    worst = std::max(worst, secs);
  }

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "E2 10k axioms %.3f s, N 10k axioms %.3f s, type elimination worst %.3f s over "
                "%zu instances (closure <= %zu)",
                e2Secs, nSecs, worst, timed, largest);
  const bool ok = e2Answer && nAnswer && e2Secs < 1.0 && nSecs < 1.0 && worst < 5.0 && timed > 0;
  return report(8, ok, buf, e2Secs + nSecs + worst);
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3,
                                                    criterion4, criterion5, criterion6,
                                                    criterion7, criterion8};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, std::string("exception: ") + e.what(), 0);
    }
    all = all && ok;
  }
  return all ? 0 : 1;
}
