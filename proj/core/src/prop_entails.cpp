#include <algorithm>
#include <bit>
#include <map>

#include "clonesub/error.hpp"
#include "clonesub/semantics.hpp"

namespace clonesub {

namespace {

// Evaluates a quantifier-free concept on 64 assignments at once; lane j of
// the result is the value under assignment j of the block.
std::uint64_t evalLanes(const Concept& c, const std::map<std::string, std::uint64_t>& lanes) {
  switch (c.kind()) {
    case Concept::Kind::Atom: return lanes.at(c.name());
    case Concept::Kind::NegAtom: return ~lanes.at(c.name());
    case Concept::Kind::Exists:
    case Concept::Kind::Forall:
      throw FragmentError("propositional entailment does not accept quantifiers");
    case Concept::Kind::Op: break;
  }
  const BoolFun& f = c.op().fun;
  std::vector<std::uint64_t> args;
  args.reserve(f.arity());
  for (const auto& ch : c.children()) args.push_back(evalLanes(ch, lanes));
  std::uint64_t out = 0;
  for (std::uint64_t row = 0; row < f.rows(); ++row) {
    if (!f(row)) continue;
    std::uint64_t term = ~std::uint64_t{0};
    for (unsigned i = 0; i < f.arity(); ++i) {
      term &= BoolFun::argument(f.arity(), row, i) ? args[i] : ~args[i];
    }
    out |= term;
  }
  return out;
}

void requireQuantifierFree(const Problem& p) {
  std::set<Operator> ops;
  QuantifierSet q;
  for (const auto& ax : p.tbox) {
    collectSignature(ax.lhs, ops, q);
    collectSignature(ax.rhs, ops, q);
  }
  collectSignature(p.lhs, ops, q);
  collectSignature(p.rhs, ops, q);
  if (!q.empty()) throw FragmentError("propositional entailment does not accept quantifiers");
}

}  // namespace

std::optional<std::vector<bool>> EnumerationSearch::findCounterexample(
    const Problem& p, const std::vector<std::string>& atoms) const {
  const auto n = atoms.size();
  if (n > maxAtoms_) {
    throw ResourceError("propositional enumeration over " + std::to_string(n) +
                        " atoms exceeds the cap of " + std::to_string(maxAtoms_));
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t blocks = (total + 63) / 64;
  std::map<std::string, std::uint64_t> lanes;

  for (std::uint64_t b = 0; b < blocks; ++b) {
    // Atom i takes bit i of the assignment index b*64 + lane.
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t word = 0;
      if (i < 6) {
        for (unsigned lane = 0; lane < 64; ++lane) {
          if ((lane >> i) & 1U) word |= std::uint64_t{1} << lane;
        }
      } else if (((b >> (i - 6)) & 1U) != 0) {
        word = ~std::uint64_t{0};
      }
      lanes[atoms[i]] = word;
    }
    std::uint64_t bad = total - b * 64 >= 64 ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << (total - b * 64)) - 1;
    bad &= evalLanes(p.lhs, lanes) & ~evalLanes(p.rhs, lanes);
    for (const auto& ax : p.tbox) {
      if (bad == 0) break;
      bad &= ~evalLanes(ax.lhs, lanes) | evalLanes(ax.rhs, lanes);
    }
    if (bad != 0) {
      const std::uint64_t index = b * 64 + static_cast<std::uint64_t>(std::countr_zero(bad));
      std::vector<bool> assignment(n);
      for (std::size_t i = 0; i < n; ++i) assignment[i] = (index >> i) & 1U;
      return assignment;
    }
  }
  return std::nullopt;
}

bool propEntails(const Problem& p, const PropositionalSearch& search) {
  requireQuantifierFree(p);
  const auto atomSet = p.atoms();
  const std::vector<std::string> atoms(atomSet.begin(), atomSet.end());
  return !search.findCounterexample(p, atoms).has_value();
}

bool propEntails(const Problem& p) { return propEntails(p, EnumerationSearch{}); }

std::optional<Interpretation> propCountermodel(const Problem& p) {
  requireQuantifierFree(p);
  const auto atomSet = p.atoms();
  const std::vector<std::string> atoms(atomSet.begin(), atomSet.end());
  const auto cex = EnumerationSearch{}.findCounterexample(p, atoms);
  if (!cex) return std::nullopt;
  Interpretation interp(1);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    interp.setAtom(atoms[i], ElementSet(1, (*cex)[i] ? 1UL : 0UL));
  }
  return interp;
}

}  // namespace clonesub
