#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clonesub/boolfun.hpp"

namespace clonesub {

/// Clones of Post's lattice the classification talks about.
enum class CloneId {
  BF, S00, S10, D1, D2, M0, M1,
  L, L0, L1, L2, L3,
  V, V0, V2, E, E0, E2,
  N, N2, I, I0, I1, I2,
  Other,
};

/// Every named clone (Other excluded), in declaration order.
std::span<const CloneId> cloneInventory();
std::string_view cloneName(CloneId c);
std::optional<CloneId> cloneFromName(std::string_view name);

/// A canonical base: functions paired with the operator names used when the
/// base has to be written out as a problem file.
struct NamedFun {
  std::string name;
  BoolFun fun;
};
const std::vector<NamedFun>& canonicalBase(CloneId c);
std::vector<BoolFun> canonicalFunctions(CloneId c);

/// The clone {dual f | f ∈ c}, or Other when that clone is not in the inventory.
CloneId dualClone(CloneId c);

/// Membership predicate of c for a single function (c ≠ Other).
bool cloneAdmits(CloneId c, const BoolFun& f);

/// c ⊆ [base], decided on the ternary closure fragment.
bool cloneContains(CloneId c, std::span<const BoolFun> base);
/// Same test on a precomputed fragment of arity >= 3.
bool cloneContains(CloneId c, const ClosureFragment& fragment);

/// [base] ⊆ c, decided by per-function shape predicates.
bool cloneSubset(std::span<const BoolFun> base, CloneId c);

/// The inventory clone equal to [base], or Other.
CloneId identifyClone(std::span<const BoolFun> base);
CloneId identifyClone(std::span<const BoolFun> base, const ClosureFragment& fragment);

}  // namespace clonesub
