#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "clonesub/concept.hpp"

namespace clonesub {

using ElementSet = boost::dynamic_bitset<>;

/// A finite interpretation over the domain {0, ..., size-1}. Atoms and roles
/// without an entry are interpreted as empty.
class Interpretation {
 public:
  explicit Interpretation(std::size_t domainSize);

  std::size_t domainSize() const noexcept { return size_; }

  void setAtom(const std::string& atom, ElementSet members);
  void addToAtom(const std::string& atom, std::size_t element);
  void addEdge(const std::string& role, std::size_t from, std::size_t to);

  ElementSet atom(const std::string& name) const;
  /// Successor sets of a role, one per element.
  const std::vector<ElementSet>* successors(const std::string& role) const;

  const std::map<std::string, ElementSet>& atoms() const noexcept { return atoms_; }
  const std::map<std::string, std::vector<ElementSet>>& roles() const noexcept { return roles_; }

  /// Deterministic text: domain size, atom extensions, role pairs.
  std::string toString() const;

 private:
  std::size_t size_;
  std::map<std::string, ElementSet> atoms_;
  std::map<std::string, std::vector<ElementSet>> roles_;
};

/// The extension c^I.
ElementSet extension(const Concept& c, const Interpretation& interp);

bool satisfies(const Interpretation& interp, const Axiom& ax);
bool satisfies(const Interpretation& interp, const TBox& tbox);

/// I ⊨ T and C^I ⊄ D^I.
bool isCountermodel(const Interpretation& interp, const Problem& p);

// ---------------------------------------------------------------------------
// Quantifier-free entailment

/// A counterexample search over propositional assignments of the atoms.
/// `atoms` fixes the variable order; a returned assignment has one entry per
/// atom and satisfies every axiom while making lhs true and rhs false.
class PropositionalSearch {
 public:
  virtual ~PropositionalSearch() = default;
  virtual std::optional<std::vector<bool>> findCounterexample(
      const Problem& p, const std::vector<std::string>& atoms) const = 0;
};

/// Enumerates all 2^n assignments, 64 at a time, stopping at the first hit.
class EnumerationSearch final : public PropositionalSearch {
 public:
  explicit EnumerationSearch(unsigned maxAtoms = 30) : maxAtoms_(maxAtoms) {}
  std::optional<std::vector<bool>> findCounterexample(
      const Problem& p, const std::vector<std::string>& atoms) const override;

 private:
  unsigned maxAtoms_;
};

/// Quantifier-free subsumption via propositional entailment. A one-element
/// interpretation suffices because extensions are computed pointwise.
/// Throws FragmentError on quantified input.
bool propEntails(const Problem& p);
bool propEntails(const Problem& p, const PropositionalSearch& search);

/// The one-element countermodel behind a negative propEntails answer.
std::optional<Interpretation> propCountermodel(const Problem& p);

// ---------------------------------------------------------------------------
// Bounded countermodel search

struct RefuteOptions {
  /// Conflict budget of the SAT search per domain size.
  std::uint64_t maxConflicts = 2'000'000;
};

/// A countermodel with at most `maxDomain` elements, if one exists. An empty
/// result is not a proof of subsumption. Throws ResourceError when the
/// search budget runs out.
std::optional<Interpretation> boundedRefute(const Problem& p, std::size_t maxDomain,
                                            const RefuteOptions& options = {});

// ---------------------------------------------------------------------------
// Type elimination

struct TypeEliminationOptions {
  /// Cap on axiom-respecting candidate types (about 100 bytes each).
  std::size_t maxTypes = std::size_t{1} << 22;
};

struct TypeEliminationStats {
  std::size_t candidateTypes = 0;
  std::size_t survivingTypes = 0;
  std::size_t rounds = 0;
  std::size_t closureSize = 0;
  /// Surviving type count after each round, starting with the candidates.
  std::vector<std::size_t> history;
};

/// Is `c` satisfiable with respect to `tbox`?
bool tcsatTypeElim(const TBox& tbox, const Concept& c, const TypeEliminationOptions& options = {},
                   TypeEliminationStats* stats = nullptr);

/// (T, C, D) is a yes-instance iff C ⊓ ¬D is unsatisfiable w.r.t. T.
bool generalSubsumes(const Problem& p, const TypeEliminationOptions& options = {});

}  // namespace clonesub
