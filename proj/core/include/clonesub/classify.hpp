#pragma once

#include <span>
#include <string>
#include <string_view>

#include "clonesub/boolfun.hpp"
#include "clonesub/clone.hpp"
#include "clonesub/concept.hpp"

namespace clonesub {

enum class ComplexityClass { NL, ParityL, P, coNP, EXPTIME };

std::string_view className(ComplexityClass c);

/// Complexity of subsumption for a fragment: either completeness for one
/// class or a (hardness, membership) pair.
struct ComplexityLabel {
  enum class Kind { Complete, Bounds };

  Kind kind = Kind::Complete;
  ComplexityClass cls = ComplexityClass::P;  // Complete only
  ComplexityClass lower = ComplexityClass::P;  // Bounds only
  ComplexityClass upper = ComplexityClass::P;  // Bounds only
  std::string cite;
  bool openFlag = false;

  static ComplexityLabel complete(ComplexityClass c, std::string cite);
  static ComplexityLabel bounds(ComplexityClass lower, ComplexityClass upper, std::string cite,
                                bool open = false);

  /// "P-complete", "coNP-hard, in EXPTIME", "P-hard, in EXPTIME (open)".
  std::string toString() const;

  /// Equality ignores the citation text.
  bool sameVerdict(const ComplexityLabel& o) const;
};

/// The classification for operator functions B and quantifiers Q. The rules
/// of each quantifier set are tried in a fixed order; the first match wins.
/// Throws Error if no rule applies, which would be a bug in the case split.
ComplexityLabel complexityLabel(std::span<const BoolFun> base, QuantifierSet q);
ComplexityLabel complexityLabel(CloneId clone, QuantifierSet q);

/// The four quantifier sets in table order: none, forall, exists, both.
std::span<const QuantifierSet> allQuantifierSets();

enum class TableFormat { Text, Csv };

/// Labels for every inventory clone under every quantifier set.
std::string classificationTable(TableFormat format);

}  // namespace clonesub
