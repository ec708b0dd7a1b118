#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "clonesub/concept.hpp"

namespace clonesub {

/// Operators visible to the parser, keyed by name. Starts with the built-ins.
class OperatorTable {
 public:
  OperatorTable();

  /// Adds a declaration; redeclaring a name with a different table throws.
  void declare(const Operator& op);
  const Operator* find(std::string_view name) const;

 private:
  std::map<std::string, Operator, std::less<>> ops_;
};

/// Parses a problem file.
///
///     op <name> <arity> <truthtable>
///     axiom <concept> <= <concept>
///     equiv <concept> == <concept>
///     query <concept> <= <concept>
///     quantifiers none|exists|forall|both|auto
///
/// '%' starts a comment. Concepts are atoms, `op(c, ...)`, `exists r . c`,
/// `forall r . c`, parentheses and the infix sugar `!`, `&`, `^`, `|` (in
/// decreasing binding strength). A quantifier binds like `!`, so
/// `exists r . A & B` is `(exists r . A) & B`.
Problem parseProblem(std::string_view text);

/// Parses a single concept against an operator table.
Concept parseConcept(std::string_view text, const OperatorTable& ops = {});

/// ¬c in negation normal form: operators are replaced by their duals, the
/// quantifiers swap and atoms flip polarity.
Concept nnfNeg(const Concept& c);

/// The operator computing the dual function. Self-dual operators map to
/// themselves and built-in duals keep built-in names; otherwise the name is
/// prefixed with "dual_" (or the prefix is removed).
Operator dualOperator(const Operator& op);

/// Contraposition: ({F^¬ ⊑ E^¬}, D^¬, C^¬). When ¬ is not in the clone of the
/// operators, negated atoms ¬A are then renamed to fresh atoms A′.
Problem dualizeInstance(const Problem& p);

/// `name` followed by as many ′ as needed to avoid `taken`.
std::string freshName(const std::string& name, const std::set<std::string>& taken);

}  // namespace clonesub
