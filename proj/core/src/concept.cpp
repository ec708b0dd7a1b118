#include "clonesub/concept.hpp"

#include <algorithm>
#include <sstream>

#include "clonesub/error.hpp"

namespace clonesub {

const std::vector<Operator>& builtinOperators() {
  static const std::vector<Operator> ops = {
      {"and", fns::conj()}, {"or", fns::disj()}, {"not", fns::neg()},
      {"xor", fns::exclusiveOr()}, {"top", fns::top()}, {"bot", fns::bot()},
  };
  return ops;
}

const Operator* findBuiltin(std::string_view name) {
  for (const auto& op : builtinOperators()) {
    if (op.name == name) return &op;
  }
  return nullptr;
}

const Operator* builtinFor(const BoolFun& f) {
  for (const auto& op : builtinOperators()) {
    if (op.fun == f) return &op;
  }
  return nullptr;
}

namespace ops {
const Operator& conj() { return *findBuiltin("and"); }
const Operator& disj() { return *findBuiltin("or"); }
const Operator& neg() { return *findBuiltin("not"); }
const Operator& exclusiveOr() { return *findBuiltin("xor"); }
const Operator& top() { return *findBuiltin("top"); }
const Operator& bot() { return *findBuiltin("bot"); }
}  // namespace ops

struct Concept::Node {
  Kind kind;
  std::string name;
  std::optional<Operator> op;
  std::vector<Concept> children;
};

Concept Concept::atom(std::string name) {
  if (name.empty()) throw Error("atom names must be non-empty");
  return Concept(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}, {}}));
}

Concept Concept::negatedAtom(std::string name) {
  if (name.empty()) throw Error("atom names must be non-empty");
  return Concept(std::make_shared<const Node>(Node{Kind::NegAtom, std::move(name), {}, {}}));
}

Concept Concept::op(Operator op, std::vector<Concept> children) {
  if (children.size() != op.arity()) {
    throw Error("operator '" + op.name + "' expects " + std::to_string(op.arity()) +
                " arguments, got " + std::to_string(children.size()));
  }
  return Concept(
      std::make_shared<const Node>(Node{Kind::Op, {}, std::move(op), std::move(children)}));
}

Concept Concept::exists(std::string role, Concept body) {
  if (role.empty()) throw Error("role names must be non-empty");
  return Concept(
      std::make_shared<const Node>(Node{Kind::Exists, std::move(role), {}, {std::move(body)}}));
}

Concept Concept::forall(std::string role, Concept body) {
  if (role.empty()) throw Error("role names must be non-empty");
  return Concept(
      std::make_shared<const Node>(Node{Kind::Forall, std::move(role), {}, {std::move(body)}}));
}

Concept Concept::top() { return op(ops::top(), {}); }
Concept Concept::bottom() { return op(ops::bot(), {}); }
Concept Concept::conj(Concept a, Concept b) { return op(ops::conj(), {std::move(a), std::move(b)}); }
Concept Concept::disj(Concept a, Concept b) { return op(ops::disj(), {std::move(a), std::move(b)}); }
Concept Concept::neg(Concept a) { return op(ops::neg(), {std::move(a)}); }

Concept::Kind Concept::kind() const noexcept { return node_->kind; }

const std::string& Concept::name() const {
  if (kind() == Kind::Op) throw Error("operator nodes carry no atom or role name");
  return node_->name;
}

const Operator& Concept::op() const {
  if (kind() != Kind::Op) throw Error("concept is not an operator node");
  return *node_->op;
}

const std::vector<Concept>& Concept::children() const { return node_->children; }

const Concept& Concept::body() const {
  if (!isQuantifier()) throw Error("concept is not a quantifier");
  return node_->children.front();
}

std::size_t Concept::size() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.size();
  return n;
}

std::size_t Concept::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + (isQuantifier() ? 1 : 0);
}

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.op == y.op && x.children == y.children;
}

std::string QuantifierSet::toString() const {
  if (exists && forall) return "both";
  if (exists) return "exists";
  if (forall) return "forall";
  return "none";
}

std::optional<QuantifierSet> quantifierSetFromString(std::string_view s) {
  if (s == "none") return QuantifierSet::none();
  if (s == "exists") return QuantifierSet::onlyExists();
  if (s == "forall") return QuantifierSet::onlyForall();
  if (s == "both") return QuantifierSet::both();
  return std::nullopt;
}

std::vector<BoolFun> Signature::functions() const {
  std::vector<BoolFun> fs;
  for (const auto& op : operators) {
    if (std::find(fs.begin(), fs.end(), op.fun) == fs.end()) fs.push_back(op.fun);
  }
  return fs;
}

void collectSignature(const Concept& c, std::set<Operator>& ops, QuantifierSet& q) {
  switch (c.kind()) {
    case Concept::Kind::Atom: return;
    case Concept::Kind::NegAtom: ops.insert(ops::neg()); return;
    case Concept::Kind::Op: ops.insert(c.op()); break;
    case Concept::Kind::Exists: q.exists = true; break;
    case Concept::Kind::Forall: q.forall = true; break;
  }
  for (const auto& ch : c.children()) collectSignature(ch, ops, q);
}

void collectAtoms(const Concept& c, std::set<std::string>& atoms) {
  if (c.kind() == Concept::Kind::Atom || c.kind() == Concept::Kind::NegAtom) {
    atoms.insert(c.name());
    return;
  }
  for (const auto& ch : c.children()) collectAtoms(ch, atoms);
}

void collectRoles(const Concept& c, std::set<std::string>& roles) {
  if (c.isQuantifier()) roles.insert(c.name());
  for (const auto& ch : c.children()) collectRoles(ch, roles);
}

Signature Problem::signature() const {
  std::set<Operator> ops;
  QuantifierSet q;
  for (const auto& ax : tbox) {
    collectSignature(ax.lhs, ops, q);
    collectSignature(ax.rhs, ops, q);
  }
  collectSignature(lhs, ops, q);
  collectSignature(rhs, ops, q);
  if (declaredQuantifiers) q = *declaredQuantifiers;
  return Signature{{ops.begin(), ops.end()}, q};
}

std::set<std::string> Problem::atoms() const {
  std::set<std::string> out;
  for (const auto& ax : tbox) {
    collectAtoms(ax.lhs, out);
    collectAtoms(ax.rhs, out);
  }
  collectAtoms(lhs, out);
  collectAtoms(rhs, out);
  return out;
}

std::set<std::string> Problem::roles() const {
  std::set<std::string> out;
  for (const auto& ax : tbox) {
    collectRoles(ax.lhs, out);
    collectRoles(ax.rhs, out);
  }
  collectRoles(lhs, out);
  collectRoles(rhs, out);
  return out;
}

std::size_t Problem::size() const {
  std::size_t n = lhs.size() + rhs.size();
  for (const auto& ax : tbox) n += ax.lhs.size() + ax.rhs.size();
  return n;
}

namespace {

void print(std::ostream& out, const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::Atom: out << c.name(); return;
    case Concept::Kind::NegAtom: out << "not(" << c.name() << ')'; return;
    case Concept::Kind::Exists: out << "exists " << c.name() << " . "; break;
    case Concept::Kind::Forall: out << "forall " << c.name() << " . "; break;
    case Concept::Kind::Op: {
      out << c.op().name;
      if (c.op().arity() == 0) return;
      out << '(';
      for (std::size_t i = 0; i < c.children().size(); ++i) {
        if (i) out << ", ";
        print(out, c.children()[i]);
      }
      out << ')';
      return;
    }
  }
  // Quantifier bodies that start with a quantifier need no parentheses; the
  // grammar reads `exists r . exists s . A` right-nested.
  print(out, c.body());
}

}  // namespace

std::string toString(const Concept& c) {
  std::ostringstream out;
  print(out, c);
  return out.str();
}

std::string toString(const Axiom& a) { return toString(a.lhs) + " <= " + toString(a.rhs); }

std::string toString(const Problem& p) {
  std::ostringstream out;
  std::set<Operator> ops;
  QuantifierSet q;
  for (const auto& ax : p.tbox) {
    collectSignature(ax.lhs, ops, q);
    collectSignature(ax.rhs, ops, q);
  }
  collectSignature(p.lhs, ops, q);
  collectSignature(p.rhs, ops, q);
  for (const auto& op : ops) {
    const Operator* b = findBuiltin(op.name);
    if (b != nullptr && b->fun == op.fun) continue;
    out << "op " << op.name << ' ' << op.arity() << ' ' << op.fun.toString() << '\n';
  }
  if (p.declaredQuantifiers) out << "quantifiers " << p.declaredQuantifiers->toString() << '\n';
  for (const auto& ax : p.tbox) out << "axiom " << toString(ax) << '\n';
  out << "query " << toString(p.lhs) << " <= " << toString(p.rhs) << '\n';
  return out.str();
}

}  // namespace clonesub
