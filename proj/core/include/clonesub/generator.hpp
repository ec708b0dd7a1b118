#pragma once

#include <cstdint>
#include <random>

#include "clonesub/clone.hpp"
#include "clonesub/concept.hpp"

namespace clonesub {

struct GeneratorConfig {
  CloneId clone = CloneId::BF;
  QuantifierSet quantifiers;
  unsigned atoms = 4;
  unsigned axioms = 4;
  /// Maximum nesting of operators and quantifiers in a concept.
  unsigned depth = 2;
  /// Maximum quantifier nesting; only used when quantifiers are allowed.
  unsigned roleDepth = 2;
  unsigned roles = 2;
  std::uint64_t seed = 1;
};

/// A random instance over the canonical base of the clone. The TBox and
/// query use only those operators and the configured quantifiers, and the
/// quantifier set is declared so the fragment is fixed. Deterministic in the
/// seed on every platform (no std distributions are involved).
Problem generateProblem(const GeneratorConfig& config);

/// A random concept drawn from the same distribution, for callers that build
/// their own instances.
class ConceptSampler {
 public:
  explicit ConceptSampler(const GeneratorConfig& config);

  Concept sample(unsigned depth, unsigned roleDepth);
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  GeneratorConfig config_;
  std::vector<Operator> operators_;
  std::mt19937_64 rng_;
};

}  // namespace clonesub
