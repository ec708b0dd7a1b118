#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "clonesub/boolfun.hpp"

namespace clonesub {

/// A named Boolean operator ∘_f.
struct Operator {
  std::string name;
  BoolFun fun;

  unsigned arity() const noexcept { return fun.arity(); }
  friend bool operator==(const Operator&, const Operator&) = default;
  friend auto operator<=>(const Operator&, const Operator&) = default;
};

/// The built-in operators: and, or, not, xor, top, bot.
const std::vector<Operator>& builtinOperators();
const Operator* findBuiltin(std::string_view name);
/// A built-in operator computing exactly `f`, if any.
const Operator* builtinFor(const BoolFun& f);

namespace ops {
const Operator& conj();
const Operator& disj();
const Operator& neg();
const Operator& exclusiveOr();
const Operator& top();
const Operator& bot();
}  // namespace ops

/// An immutable concept description. Copies share structure.
///
/// Negated atoms are their own leaf kind (they appear after negation normal
/// form), distinct from not(A).
class Concept {
 public:
  enum class Kind { Atom, NegAtom, Op, Exists, Forall };

  static Concept atom(std::string name);
  static Concept negatedAtom(std::string name);
  static Concept op(Operator op, std::vector<Concept> children);
  static Concept exists(std::string role, Concept body);
  static Concept forall(std::string role, Concept body);
  static Concept top();
  static Concept bottom();
  static Concept conj(Concept a, Concept b);
  static Concept disj(Concept a, Concept b);
  static Concept neg(Concept a);

  Kind kind() const noexcept;
  bool isAtom() const noexcept { return kind() == Kind::Atom; }
  bool isQuantifier() const noexcept { return kind() == Kind::Exists || kind() == Kind::Forall; }

  /// Atom name for Atom/NegAtom, role name for Exists/Forall.
  const std::string& name() const;
  const Operator& op() const;
  const std::vector<Concept>& children() const;
  /// Body of a quantifier.
  const Concept& body() const;

  /// Number of AST nodes (shared subtrees counted per occurrence).
  std::size_t size() const;
  std::size_t depth() const;

  /// Structural equality.
  friend bool operator==(const Concept& a, const Concept& b);

  /// Identity of the shared node; equal pointers imply structural equality.
  const void* identity() const noexcept { return node_.get(); }

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// An axiom lhs ⊑ rhs.
struct Axiom {
  Concept lhs;
  Concept rhs;
  friend bool operator==(const Axiom&, const Axiom&) = default;
};

struct QuantifierSet {
  bool exists = false;
  bool forall = false;

  bool empty() const noexcept { return !exists && !forall; }
  bool subsetOf(const QuantifierSet& o) const noexcept {
    return (!exists || o.exists) && (!forall || o.forall);
  }
  QuantifierSet dual() const noexcept { return {forall, exists}; }
  std::string toString() const;  // none | exists | forall | both
  static QuantifierSet none() { return {}; }
  static QuantifierSet onlyExists() { return {true, false}; }
  static QuantifierSet onlyForall() { return {false, true}; }
  static QuantifierSet both() { return {true, true}; }
  friend bool operator==(const QuantifierSet&, const QuantifierSet&) = default;
};
std::optional<QuantifierSet> quantifierSetFromString(std::string_view s);

/// The operators B and quantifiers Q an instance is built from.
struct Signature {
  std::vector<Operator> operators;  // sorted, unique
  QuantifierSet quantifiers;

  /// Distinct Boolean functions of the operators.
  std::vector<BoolFun> functions() const;
};

using TBox = std::vector<Axiom>;

/// A subsumption instance (T, C, D): does T entail C ⊑ D?
struct Problem {
  TBox tbox;
  Concept lhs = Concept::top();
  Concept rhs = Concept::top();
  /// Quantifier declaration from the input; must cover the syntactic ones.
  std::optional<QuantifierSet> declaredQuantifiers;

  Signature signature() const;
  std::set<std::string> atoms() const;
  std::set<std::string> roles() const;
  std::size_t size() const;

  friend bool operator==(const Problem&, const Problem&) = default;
};

/// Operators and quantifiers syntactically present. NegAtom leaves count as not.
void collectSignature(const Concept& c, std::set<Operator>& ops, QuantifierSet& q);
void collectAtoms(const Concept& c, std::set<std::string>& atoms);
void collectRoles(const Concept& c, std::set<std::string>& roles);

std::string toString(const Concept& c);
std::string toString(const Axiom& a);
/// Problem file text; parseProblem(toString(p)) reproduces p.
std::string toString(const Problem& p);

}  // namespace clonesub
