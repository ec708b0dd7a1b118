#include "clonesub/classify.hpp"

#include <array>
#include <functional>
#include <initializer_list>
#include <sstream>

#include "clonesub/error.hpp"

namespace clonesub {

std::string_view className(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::NL: return "NL";
    case ComplexityClass::ParityL: return "⊕L";
    case ComplexityClass::P: return "P";
    case ComplexityClass::coNP: return "coNP";
    case ComplexityClass::EXPTIME: return "EXPTIME";
  }
  return "?";
}

ComplexityLabel ComplexityLabel::complete(ComplexityClass c, std::string cite) {
  ComplexityLabel l;
  l.kind = Kind::Complete;
  l.cls = c;
  l.cite = std::move(cite);
  return l;
}

ComplexityLabel ComplexityLabel::bounds(ComplexityClass lower, ComplexityClass upper,
                                        std::string cite, bool open) {
  if (lower == upper) throw Error("bounds label needs distinct classes");
  ComplexityLabel l;
  l.kind = Kind::Bounds;
  l.lower = lower;
  l.upper = upper;
  l.cite = std::move(cite);
  l.openFlag = open;
  return l;
}

std::string ComplexityLabel::toString() const {
  std::string s;
  if (kind == Kind::Complete) {
    s = std::string(className(cls)) + "-complete";
  } else {
    s = std::string(className(lower)) + "-hard, in " + std::string(className(upper));
  }
  if (openFlag) s += " (open)";
  return s;
}

bool ComplexityLabel::sameVerdict(const ComplexityLabel& o) const {
  if (kind != o.kind || openFlag != o.openFlag) return false;
  if (kind == Kind::Complete) return cls == o.cls;
  return lower == o.lower && upper == o.upper;
}

namespace {

using C = CloneId;
using K = ComplexityClass;

struct Fragment {
  std::span<const BoolFun> base;
  ClosureFragment closure;

  bool contains(CloneId c) const { return cloneContains(c, closure); }
  bool containsAny(std::initializer_list<CloneId> cs) const {
    for (auto c : cs) {
      if (contains(c)) return true;
    }
    return false;
  }
  bool within(CloneId c) const { return cloneSubset(base, c); }
  bool equals(CloneId c) const { return within(c) && contains(c); }
};

ComplexityLabel quantifierFree(const Fragment& b) {
  if (b.containsAny({C::L0, C::L1, C::L3, C::S10, C::S00, C::D2})) {
    return ComplexityLabel::complete(K::coNP, "no quantifiers: coNP-complete case");
  }
  if ((b.contains(C::E2) && b.within(C::E)) || (b.contains(C::V2) && b.within(C::V))) {
    return ComplexityLabel::complete(K::P, "no quantifiers: conjunctive/disjunctive case");
  }
  if (b.equals(C::L2)) {
    return ComplexityLabel::bounds(K::ParityL, K::coNP,
                                   "no quantifiers: L2 hardness case; generic coNP upper bound");
  }
  if (b.within(C::N)) {
    return ComplexityLabel::complete(K::NL, "no quantifiers: negation/constants case");
  }
  throw Error("no quantifier-free classification rule applies");
}

// The universal rules; the existential ones are obtained by dualizing the
// clones, which maps E2/S00 to V2/S10 and the upper bound V to E.
ComplexityLabel oneQuantifier(const Fragment& b, bool universal) {
  const auto d = [universal](CloneId c) { return universal ? c : dualClone(c); };
  const std::string q = universal ? "universal fragments" : "existential fragments";
  if (b.containsAny({d(C::E2), d(C::N2), d(C::L0), d(C::L1), d(C::S00)})) {
    return ComplexityLabel::complete(K::EXPTIME, q + ": EXPTIME-complete case");
  }
  if (b.contains(C::D2) && b.within(C::D1)) {
    return ComplexityLabel::bounds(K::coNP, K::EXPTIME, q + ": self-dual case");
  }
  if (b.within(d(C::V))) {
    return ComplexityLabel::complete(K::P, q + ": P-complete case");
  }
  if (b.equals(C::L2)) {
    return ComplexityLabel::bounds(K::P, K::EXPTIME, q + ": L2 case");
  }
  throw Error("no " + q + " classification rule applies");
}

ComplexityLabel bothQuantifiers(const Fragment& b) {
  if (b.containsAny({C::N2, C::V2, C::E2, C::I0, C::I1})) {
    return ComplexityLabel::complete(K::EXPTIME, "both quantifiers: EXPTIME-complete case");
  }
  if (b.contains(C::D2) && b.within(C::D1)) {
    return ComplexityLabel::bounds(K::coNP, K::EXPTIME, "both quantifiers: self-dual case");
  }
  if (b.equals(C::I2) || b.equals(C::L2)) {
    return ComplexityLabel::bounds(
        K::P, K::EXPTIME,
        "both quantifiers: I2/L2 case; no polynomial algorithm known, upper bound open", true);
  }
  throw Error("no both-quantifier classification rule applies");
}

}  // namespace

ComplexityLabel complexityLabel(std::span<const BoolFun> base, QuantifierSet q) {
  const Fragment b{base, closureFragment(base, 3)};
  if (q.empty()) return quantifierFree(b);
  if (q.exists && q.forall) return bothQuantifiers(b);
  return oneQuantifier(b, q.forall);
}

ComplexityLabel complexityLabel(CloneId clone, QuantifierSet q) {
  const auto fs = canonicalFunctions(clone);
  return complexityLabel(fs, q);
}

std::span<const QuantifierSet> allQuantifierSets() {
  static const std::array<QuantifierSet, 4> sets{QuantifierSet::none(),
                                                 QuantifierSet::onlyForall(),
                                                 QuantifierSet::onlyExists(),
                                                 QuantifierSet::both()};
  return sets;
}

std::string classificationTable(TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::Csv) {
    out << "clone,quantifiers,kind,class,lower,upper,open,label,cite\n";
    for (CloneId c : cloneInventory()) {
      for (const auto& q : allQuantifierSets()) {
        const auto l = complexityLabel(c, q);
        const bool complete = l.kind == ComplexityLabel::Kind::Complete;
        out << cloneName(c) << ',' << q.toString() << ',' << (complete ? "complete" : "bounds")
            << ',' << (complete ? className(l.cls) : "") << ','
            << (complete ? "" : className(l.lower)) << ','
            << (complete ? "" : className(l.upper)) << ',' << (l.openFlag ? "yes" : "no") << ",\""
            << l.toString() << "\",\"" << l.cite << "\"\n";
      }
    }
    return out.str();
  }
  out << "clone";
  for (const auto& q : allQuantifierSets()) out << " | " << q.toString();
  out << '\n';
  for (CloneId c : cloneInventory()) {
    out << cloneName(c);
    for (const auto& q : allQuantifierSets()) out << " | " << complexityLabel(c, q).toString();
    out << '\n';
  }
  return out.str();
}

}  // namespace clonesub
