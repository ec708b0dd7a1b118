#include <map>

#include "clonesub/clone.hpp"
#include "clonesub/syntax.hpp"

namespace clonesub {

Operator dualOperator(const Operator& op) {
  const BoolFun d = op.fun.dual();
  if (d == op.fun) return op;
  if (const Operator* b = builtinFor(d)) return *b;
  static constexpr std::string_view kPrefix = "dual_";
  if (op.name.starts_with(kPrefix)) return {op.name.substr(kPrefix.size()), d};
  return {std::string(kPrefix) + op.name, d};
}

Concept nnfNeg(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::Atom: return Concept::negatedAtom(c.name());
    case Concept::Kind::NegAtom: return Concept::atom(c.name());
    case Concept::Kind::Exists: return Concept::forall(c.name(), nnfNeg(c.body()));
    case Concept::Kind::Forall: return Concept::exists(c.name(), nnfNeg(c.body()));
    case Concept::Kind::Op: break;
  }
  std::vector<Concept> kids;
  kids.reserve(c.children().size());
  for (const auto& ch : c.children()) kids.push_back(nnfNeg(ch));
  return Concept::op(dualOperator(c.op()), std::move(kids));
}

std::string freshName(const std::string& name, const std::set<std::string>& taken) {
  std::string candidate = name + "′";
  while (taken.contains(candidate)) candidate += "′";
  return candidate;
}

namespace {

Concept positive(const Concept& c, const std::map<std::string, std::string>& rename) {
  switch (c.kind()) {
    case Concept::Kind::Atom: return c;
    case Concept::Kind::NegAtom: return Concept::atom(rename.at(c.name()));
    case Concept::Kind::Exists: return Concept::exists(c.name(), positive(c.body(), rename));
    case Concept::Kind::Forall: return Concept::forall(c.name(), positive(c.body(), rename));
    case Concept::Kind::Op: break;
  }
  std::vector<Concept> kids;
  kids.reserve(c.children().size());
  for (const auto& ch : c.children()) kids.push_back(positive(ch, rename));
  return Concept::op(c.op(), std::move(kids));
}

void collectNegated(const Concept& c, std::set<std::string>& out) {
  if (c.kind() == Concept::Kind::NegAtom) out.insert(c.name());
  for (const auto& ch : c.children()) collectNegated(ch, out);
}

}  // namespace

Problem dualizeInstance(const Problem& p) {
  Problem d;
  d.tbox.reserve(p.tbox.size());
  for (const auto& ax : p.tbox) d.tbox.push_back({nnfNeg(ax.rhs), nnfNeg(ax.lhs)});
  d.lhs = nnfNeg(p.rhs);
  d.rhs = nnfNeg(p.lhs);
  if (p.declaredQuantifiers) d.declaredQuantifiers = p.declaredQuantifiers->dual();

  const auto fs = p.signature().functions();
  if (cloneContains(CloneId::N2, fs)) return d;

  // Without negation in the clone every atom now occurs negated; rename each
  // ¬A to a fresh A′ consistently across TBox and query.
  std::set<std::string> negated;
  for (const auto& ax : d.tbox) {
    collectNegated(ax.lhs, negated);
    collectNegated(ax.rhs, negated);
  }
  collectNegated(d.lhs, negated);
  collectNegated(d.rhs, negated);

  std::set<std::string> taken = p.atoms();
  std::map<std::string, std::string> rename;
  for (const auto& a : negated) {
    auto fresh = freshName(a, taken);
    taken.insert(fresh);
    rename.emplace(a, std::move(fresh));
  }
  for (auto& ax : d.tbox) ax = {positive(ax.lhs, rename), positive(ax.rhs, rename)};
  d.lhs = positive(d.lhs, rename);
  d.rhs = positive(d.rhs, rename);
  return d;
}

}  // namespace clonesub
