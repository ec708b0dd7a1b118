#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clonesub/boolfun.hpp"
#include "clonesub/concept.hpp"

namespace clonesub {

// ---------------------------------------------------------------------------
// Propositional formulas

/// A propositional formula built from variables, constants and operators.
class PropFormula {
 public:
  enum class Kind { Var, Const, Apply };

  static PropFormula var(std::string name);
  static PropFormula constant(bool value);
  static PropFormula apply(Operator op, std::vector<PropFormula> args);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const { return name_; }
  bool value() const noexcept { return value_; }
  const Operator& op() const { return op_; }
  const std::vector<PropFormula>& args() const { return args_; }

  bool evaluate(const std::map<std::string, bool>& assignment) const;
  void collectVariables(std::set<std::string>& out) const;

 private:
  Kind kind_ = Kind::Const;
  std::string name_;
  bool value_ = false;
  Operator op_;
  std::vector<PropFormula> args_;
};

/// (∅, C_φ, C_ψ) with x ↦ C_x; yes iff φ ⊨ ψ. Linear.
Problem impToSubs(const PropFormula& phi, const PropFormula& psi);

// ---------------------------------------------------------------------------
// Subsumption and satisfiability

struct TcsatInstance {
  TBox tbox;
  Concept target = Concept::top();
};

/// (T, C ⊓ ¬D) in NNF; p is yes iff the concept is unsatisfiable w.r.t. T.
TcsatInstance subsToCoTcsat(const Problem& p);

/// (T, c, ⊥); yes iff c is unsatisfiable w.r.t. T.
Problem coTcsatToSubs(const TcsatInstance& inst);

// ---------------------------------------------------------------------------
// Graph accessibility

struct DirectedGraph {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;
  std::string source;
  std::string target;
};

struct Hyperedge {
  std::pair<std::string, std::string> sources;
  std::string destination;
  friend auto operator<=>(const Hyperedge&, const Hyperedge&) = default;
};

struct Hypergraph {
  std::set<std::string> vertices;
  std::vector<Hyperedge> edges;
  std::set<std::string> sources;
  std::string target;
};

/// Atom naming used by the graph reductions.
std::string vertexAtom(const std::string& vertex);

/// T = {A_u ⊑ A_v | (u,v) ∈ E}, query (A_s, A_t).
Problem gapToSubs(const DirectedGraph& g);

/// T = {A_u1 ⊓ A_u2 ⊑ A_v}, query (A_s, A_t). Several sources are joined
/// under a fresh super-source s0 with hyperedges ({s0,s0}, s).
Problem hgapToSubs(const Hypergraph& h);

/// Edge-list text: "u v" lines, "source s" and "target t".
DirectedGraph parseDirectedGraph(std::string_view text);
/// "u1 u2 -> v" lines, "source s..." (one or more names) and "target t".
Hypergraph parseHypergraph(std::string_view text);

std::string toString(const DirectedGraph& g);
std::string toString(const Hypergraph& h);

// ---------------------------------------------------------------------------
// Base independence and constants

/// Rewrites every operator node into a circuit over `targetBase`. Constants
/// become unary constant circuits applied to a fresh atom. Output size is
/// bounded by |p| times the largest circuit. Throws NotExpressibleError when
/// an operator of p lies outside [targetBase].
Problem baseChange(const Problem& p, const std::vector<Operator>& targetBase);

enum class ConstantMode { ViaNegation, ViaLatticeOps };

/// Removes the 0-ary constant operators while preserving the answer.
///
/// ViaNegation (needs ¬ ∈ [B]): ⊤ becomes a fresh T* with ¬T* ⊑ T*, ⊥ a
/// fresh F* with F* ⊑ ¬F*.
///
/// ViaLatticeOps (needs ∧ ∈ [B] for ⊤, ∨ ∈ [B] for ⊥): ⊤ becomes a fresh t,
/// every ∃r.G becomes ∃r.(G ⊓ t), axioms E ⊑ F become E ⊓ t ⊑ F and the
/// query (C ⊓ t, D); when ∀ occurs, t ⊑ ∀r.t is added for each role so that
/// t is closed under successors. ⊥ is handled dually. Linear in |p|.
/// When `base` is given the precondition is checked against it and
/// FragmentError is thrown if it fails. Without it the construction is
/// applied as is and the output simply uses the operator it introduces.
Problem simulateConstants(const Problem& p, ConstantMode mode,
                          std::optional<std::span<const BoolFun>> base = std::nullopt);

/// True iff c or some axiom of p contains a 0-ary operator.
bool hasConstants(const Problem& p);

}  // namespace clonesub
