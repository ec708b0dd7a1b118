#pragma once

// Independent reference implementations used only by the tests. None of them
// calls into the library's deciders.

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "clonesub/concept.hpp"
#include "clonesub/reductions.hpp"

namespace oracle {

// Direct recursive evaluation of a quantifier-free concept at one point.
inline bool evalPoint(const clonesub::Concept& c, const std::map<std::string, bool>& val) {
  using K = clonesub::Concept::Kind;
  switch (c.kind()) {
    case K::Atom: return val.at(c.name());
    case K::NegAtom: return !val.at(c.name());
    case K::Op: {
      std::vector<bool> args;
      for (const auto& ch : c.children()) args.push_back(evalPoint(ch, val));
      // Row index with the first argument as the most significant bit.
      std::uint64_t row = 0;
      for (bool b : args) row = row * 2 + (b ? 1 : 0);
      return ((c.op().fun.bits() >> row) & 1U) != 0;
    }
    default: break;
  }
  throw std::logic_error("evalPoint: quantifier");
}

// Brute force over all assignments: every assignment satisfying the TBox
// puts the point in D whenever it is in C.
inline bool bruteForceEntails(const clonesub::Problem& p) {
  const auto atomSet = p.atoms();
  const std::vector<std::string> atoms(atomSet.begin(), atomSet.end());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms.size()); ++m) {
    std::map<std::string, bool> val;
    for (std::size_t i = 0; i < atoms.size(); ++i) val[atoms[i]] = ((m >> i) & 1U) != 0;
    bool model = true;
    for (const auto& ax : p.tbox) {
      if (evalPoint(ax.lhs, val) && !evalPoint(ax.rhs, val)) {
        model = false;
        break;
      }
    }
    if (model && evalPoint(p.lhs, val) && !evalPoint(p.rhs, val)) return false;
  }
  return true;
}

// φ ⊨ ψ by enumerating the variables of both formulas.
inline bool formulaEntails(const clonesub::PropFormula& phi, const clonesub::PropFormula& psi) {
  std::set<std::string> vars;
  phi.collectVariables(vars);
  psi.collectVariables(vars);
  const std::vector<std::string> vs(vars.begin(), vars.end());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << vs.size()); ++m) {
    std::map<std::string, bool> val;
    for (std::size_t i = 0; i < vs.size(); ++i) val[vs[i]] = ((m >> i) & 1U) != 0;
    if (phi.evaluate(val) && !psi.evaluate(val)) return false;
  }
  return true;
}

// Breadth-first search from the source.
inline bool reachable(const clonesub::DirectedGraph& g) {
  std::set<std::string> seen{g.source};
  std::deque<std::string> queue{g.source};
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    if (u == g.target) return true;
    for (const auto& [a, b] : g.edges) {
      if (a == u && seen.insert(b).second) queue.push_back(b);
    }
  }
  return false;
}

// Naive fixpoint: repeatedly fire every hyperedge whose two sources are
// reached, starting from S.
inline bool hyperReachable(const clonesub::Hypergraph& h) {
  std::set<std::string> reached = h.sources;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : h.edges) {
      if (reached.contains(e.sources.first) && reached.contains(e.sources.second) &&
          reached.insert(e.destination).second) {
        changed = true;
      }
    }
  }
  return reached.contains(h.target);
}

}  // namespace oracle
