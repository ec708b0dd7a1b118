#include "clonesub/clone.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "clonesub/error.hpp"

namespace clonesub {

namespace {

constexpr std::array kInventory = {
    CloneId::BF, CloneId::S00, CloneId::S10, CloneId::D1, CloneId::D2, CloneId::M0,
    CloneId::M1, CloneId::L,   CloneId::L0,  CloneId::L1, CloneId::L2, CloneId::L3,
    CloneId::V,  CloneId::V0,  CloneId::V2,  CloneId::E,  CloneId::E0, CloneId::E2,
    CloneId::N,  CloneId::N2,  CloneId::I,   CloneId::I0, CloneId::I1, CloneId::I2,
};

constexpr std::array<std::string_view, 25> kNames = {
    "BF", "S00", "S10", "D1", "D2", "M0", "M1", "L",  "L0", "L1", "L2", "L3", "V",
    "V0", "V2",  "E",   "E0", "E2", "N",  "N2", "I",  "I0", "I1", "I2", "OTHER",
};

NamedFun named(std::string name, std::string_view table) {
  return {std::move(name), BoolFun::fromString(table)};
}

std::map<CloneId, std::vector<NamedFun>> makeBases() {
  const auto andF = named("and", "0001");
  const auto orF = named("or", "0111");
  const auto notF = named("not", "10");
  const auto xorF = named("xor", "0110");
  const auto top = named("top", "1");
  const auto bot = named("bot", "0");
  const auto id = named("id", "01");
  return {
      {CloneId::BF, {andF, notF}},
      {CloneId::S00, {named("s00", "00011111")}},  // x∨(y∧z)
      {CloneId::S10, {named("s10", "00000111")}},  // x∧(y∨z)
      {CloneId::D1, {named("d1", "00101011")}},    // maj(x,y,¬z)
      {CloneId::D2, {named("maj", "00010111")}},
      {CloneId::M0, {andF, orF, bot}},
      {CloneId::M1, {andF, orF, top}},
      {CloneId::L, {xorF, top}},
      {CloneId::L0, {xorF}},
      {CloneId::L1, {named("eq", "1001")}},
      {CloneId::L2, {named("xor3", "01101001")}},
      {CloneId::L3, {named("xnor3", "10010110")}},  // x⊕y⊕z⊕1
      {CloneId::V, {orF, top, bot}},
      {CloneId::V0, {orF, bot}},
      {CloneId::V2, {orF}},
      {CloneId::E, {andF, top, bot}},
      {CloneId::E0, {andF, bot}},
      {CloneId::E2, {andF}},
      {CloneId::N, {notF, top}},
      {CloneId::N2, {notF}},
      {CloneId::I, {id, top, bot}},
      {CloneId::I0, {id, bot}},
      {CloneId::I1, {id, top}},
      {CloneId::I2, {id}},
  };
}

// f = c0 op (op of a nonempty variable subset), where op is ∧ or ∨.
bool isLatticeShape(const BoolFun& f, bool conjunctive) {
  if (f.isConstant()) return true;
  const auto vars = f.essentialVariables();
  for (std::uint64_t row = 0; row < f.rows(); ++row) {
    bool expected = conjunctive;
    for (unsigned v : vars) {
      const bool a = BoolFun::argument(f.arity(), row, v);
      expected = conjunctive ? (expected && a) : (expected || a);
    }
    if (f(row) != expected) return false;
  }
  return true;
}

bool isEssentiallyUnary(const BoolFun& f) { return f.essentialVariables().size() <= 1; }

bool isProjectionOrConstant(const BoolFun& f) {
  return f.isConstant() || f.projectionIndex().has_value();
}

}  // namespace

std::span<const CloneId> cloneInventory() { return kInventory; }

std::string_view cloneName(CloneId c) { return kNames[static_cast<std::size_t>(c)]; }

std::optional<CloneId> cloneFromName(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<CloneId>(i);
  }
  return std::nullopt;
}

const std::vector<NamedFun>& canonicalBase(CloneId c) {
  static const auto bases = makeBases();
  const auto it = bases.find(c);
  if (it == bases.end()) throw Error("clone OTHER has no canonical base");
  return it->second;
}

std::vector<BoolFun> canonicalFunctions(CloneId c) {
  std::vector<BoolFun> out;
  for (const auto& nf : canonicalBase(c)) out.push_back(nf.fun);
  return out;
}

CloneId dualClone(CloneId c) {
  switch (c) {
    case CloneId::S00: return CloneId::S10;
    case CloneId::S10: return CloneId::S00;
    case CloneId::M0: return CloneId::M1;
    case CloneId::M1: return CloneId::M0;
    case CloneId::L0: return CloneId::L1;
    case CloneId::L1: return CloneId::L0;
    case CloneId::V: return CloneId::E;
    // [∨,⊥] and [∧,⊥] dualize to [∧,⊤] and [∨,⊤], outside the inventory.
    case CloneId::V0: return CloneId::Other;
    case CloneId::V2: return CloneId::E2;
    case CloneId::E: return CloneId::V;
    case CloneId::E0: return CloneId::Other;
    case CloneId::E2: return CloneId::V2;
    case CloneId::I0: return CloneId::I1;
    case CloneId::I1: return CloneId::I0;
    default: return c;
  }
}

bool cloneAdmits(CloneId c, const BoolFun& f) {
  const bool r0 = f.preservesZero();
  const bool r1 = f.preservesOne();
  switch (c) {
    case CloneId::BF: return true;
    case CloneId::S00: return f.isSeparating(false) && r0 && r1 && f.isMonotone();
    case CloneId::S10: return f.isSeparating(true) && r0 && r1 && f.isMonotone();
    case CloneId::D1: return f.isSelfDual() && r0 && r1;
    case CloneId::D2: return f.isSelfDual() && f.isMonotone();
    case CloneId::M0: return f.isMonotone() && r0;
    case CloneId::M1: return f.isMonotone() && r1;
    case CloneId::L: return f.isAffine();
    case CloneId::L0: return f.isAffine() && r0;
    case CloneId::L1: return f.isAffine() && r1;
    case CloneId::L2: return f.isAffine() && r0 && r1;
    case CloneId::L3: return f.isAffine() && f.isSelfDual();
    case CloneId::V: return isLatticeShape(f, false);
    case CloneId::V0: return isLatticeShape(f, false) && r0;
    case CloneId::V2: return isLatticeShape(f, false) && r0 && r1;
    case CloneId::E: return isLatticeShape(f, true);
    case CloneId::E0: return isLatticeShape(f, true) && r0;
    case CloneId::E2: return isLatticeShape(f, true) && r0 && r1;
    case CloneId::N: return isEssentiallyUnary(f);
    case CloneId::N2: return isEssentiallyUnary(f) && f.isSelfDual();
    case CloneId::I: return isProjectionOrConstant(f);
    case CloneId::I0: return isProjectionOrConstant(f) && r0;
    case CloneId::I1: return isProjectionOrConstant(f) && r1;
    case CloneId::I2: return f.projectionIndex().has_value();
    case CloneId::Other: break;
  }
  throw Error("no membership predicate for clone " + std::string(cloneName(c)));
}

bool cloneContains(CloneId c, const ClosureFragment& fragment) {
  if (c == CloneId::Other) throw Error("cloneContains is undefined for OTHER");
  if (fragment.arity() < 3) throw Error("clone containment needs a fragment of arity >= 3");
  return std::ranges::all_of(canonicalBase(c),
                             [&](const NamedFun& nf) { return fragment.contains(nf.fun); });
}

bool cloneContains(CloneId c, std::span<const BoolFun> base) {
  if (c == CloneId::I2) return true;
  return cloneContains(c, closureFragment(base, 3));
}

bool cloneSubset(std::span<const BoolFun> base, CloneId c) {
  return std::ranges::all_of(base, [&](const BoolFun& f) { return cloneAdmits(c, f); });
}

CloneId identifyClone(std::span<const BoolFun> base, const ClosureFragment& fragment) {
  for (CloneId c : kInventory) {
    if (cloneSubset(base, c) && cloneContains(c, fragment)) return c;
  }
  return CloneId::Other;
}

CloneId identifyClone(std::span<const BoolFun> base) {
  return identifyClone(base, closureFragment(base, 3));
}

}  // namespace clonesub
