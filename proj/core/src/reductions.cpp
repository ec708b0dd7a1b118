#include "clonesub/reductions.hpp"

#include <functional>
#include <sstream>

#include "clonesub/boolfun.hpp"
#include "clonesub/clone.hpp"
#include "clonesub/error.hpp"
#include "clonesub/syntax.hpp"

namespace clonesub {

// ---------------------------------------------------------------------------
// PropFormula

PropFormula PropFormula::var(std::string name) {
  PropFormula f;
  f.kind_ = Kind::Var;
  f.name_ = std::move(name);
  return f;
}

PropFormula PropFormula::constant(bool value) {
  PropFormula f;
  f.kind_ = Kind::Const;
  f.value_ = value;
  return f;
}

PropFormula PropFormula::apply(Operator op, std::vector<PropFormula> args) {
  if (args.size() != op.arity()) {
    throw Error("operator " + op.name + " expects " + std::to_string(op.arity()) + " arguments");
  }
  PropFormula f;
  f.kind_ = Kind::Apply;
  f.op_ = std::move(op);
  f.args_ = std::move(args);
  return f;
}

bool PropFormula::evaluate(const std::map<std::string, bool>& assignment) const {
  switch (kind_) {
    case Kind::Var: return assignment.at(name_);
    case Kind::Const: return value_;
    case Kind::Apply: break;
  }
  std::uint64_t row = 0;
  for (const auto& a : args_) row = (row << 1) | (a.evaluate(assignment) ? 1u : 0u);
  return op_.fun(row);
}

void PropFormula::collectVariables(std::set<std::string>& out) const {
  if (kind_ == Kind::Var) out.insert(name_);
  for (const auto& a : args_) a.collectVariables(out);
}

namespace {

Concept toConcept(const PropFormula& f) {
  switch (f.kind()) {
    case PropFormula::Kind::Var: return Concept::atom("C_" + f.name());
    case PropFormula::Kind::Const: return f.value() ? Concept::top() : Concept::bottom();
    case PropFormula::Kind::Apply: break;
  }
  std::vector<Concept> kids;
  for (const auto& a : f.args()) kids.push_back(toConcept(a));
  return Concept::op(f.op(), std::move(kids));
}

// Bottom-up rewrite: children first, then `fn` on the node itself.
using Rewriter = std::function<Concept(const Concept&, std::vector<Concept>)>;

Concept rewrite(const Concept& c, const Rewriter& fn) {
  std::vector<Concept> kids;
  if (c.kind() == Concept::Kind::Op) {
    for (const auto& ch : c.children()) kids.push_back(rewrite(ch, fn));
  } else if (c.isQuantifier()) {
    kids.push_back(rewrite(c.body(), fn));
  }
  return fn(c, std::move(kids));
}

// Rebuilds c with new children, keeping its kind.
Concept rebuild(const Concept& c, std::vector<Concept> kids) {
  switch (c.kind()) {
    case Concept::Kind::Atom:
    case Concept::Kind::NegAtom: return c;
    case Concept::Kind::Op: return Concept::op(c.op(), std::move(kids));
    case Concept::Kind::Exists: return Concept::exists(c.name(), std::move(kids[0]));
    case Concept::Kind::Forall: return Concept::forall(c.name(), std::move(kids[0]));
  }
  return c;
}

Problem mapProblem(const Problem& p, const Rewriter& fn) {
  Problem out;
  for (const auto& ax : p.tbox) out.tbox.push_back({rewrite(ax.lhs, fn), rewrite(ax.rhs, fn)});
  out.lhs = rewrite(p.lhs, fn);
  out.rhs = rewrite(p.rhs, fn);
  out.declaredQuantifiers = p.declaredQuantifiers;
  return out;
}

bool isConstantOp(const Concept& c, bool value) {
  return c.kind() == Concept::Kind::Op && c.op().arity() == 0 &&
         c.op().fun == BoolFun::constant(value);
}

bool containsConstant(const Concept& c) {
  if (c.kind() == Concept::Kind::Op && c.op().arity() == 0) return true;
  if (c.isQuantifier()) return containsConstant(c.body());
  for (const auto& ch : c.children()) {
    if (containsConstant(ch)) return true;
  }
  return false;
}

bool containsConstant(const Problem& p, bool value) {
  bool found = false;
  const Rewriter probe = [&](const Concept& c, std::vector<Concept> kids) {
    found = found || isConstantOp(c, value);
    return rebuild(c, std::move(kids));
  };
  mapProblem(p, probe);
  return found;
}

// `base` itself when free, otherwise a primed variant.
std::string unusedName(const std::string& base, const std::set<std::string>& taken) {
  return taken.contains(base) ? freshName(base, taken) : base;
}

std::set<std::string> takenNames(const Problem& p) {
  auto names = p.atoms();
  for (const auto& r : p.roles()) names.insert(r);
  return names;
}

bool quantifierOccurs(const Problem& p, Concept::Kind kind) {
  bool found = false;
  const Rewriter probe = [&](const Concept& c, std::vector<Concept> kids) {
    found = found || c.kind() == kind;
    return rebuild(c, std::move(kids));
  };
  mapProblem(p, probe);
  return found;
}

Problem constantsViaNegation(const Problem& p) {
  const bool hasTop = containsConstant(p, true);
  const bool hasBot = containsConstant(p, false);
  auto taken = takenNames(p);
  const std::string topName = unusedName("T_star", taken);
  taken.insert(topName);
  const std::string botName = unusedName("F_star", taken);

  const Rewriter fn = [&](const Concept& c, std::vector<Concept> kids) {
    if (isConstantOp(c, true)) return Concept::atom(topName);
    if (isConstantOp(c, false)) return Concept::atom(botName);
    return rebuild(c, std::move(kids));
  };
  Problem out = mapProblem(p, fn);
  if (hasTop) {
    out.tbox.push_back({Concept::neg(Concept::atom(topName)), Concept::atom(topName)});
  }
  if (hasBot) {
    out.tbox.push_back({Concept::atom(botName), Concept::neg(Concept::atom(botName))});
  }
  return out;
}

Problem relativizeTop(const Problem& p) {
  const std::string t = unusedName("t", takenNames(p));
  const Concept tc = Concept::atom(t);
  const Rewriter fn = [&](const Concept& c, std::vector<Concept> kids) {
    if (isConstantOp(c, true)) return tc;
    if (c.kind() == Concept::Kind::Exists) {
      return Concept::exists(c.name(), Concept::conj(std::move(kids[0]), tc));
    }
    return rebuild(c, std::move(kids));
  };
  Problem out;
  out.declaredQuantifiers = p.declaredQuantifiers;
  for (const auto& ax : p.tbox) {
    out.tbox.push_back({Concept::conj(rewrite(ax.lhs, fn), tc), rewrite(ax.rhs, fn)});
  }
  if (quantifierOccurs(p, Concept::Kind::Forall)) {
    for (const auto& r : p.roles()) out.tbox.push_back({tc, Concept::forall(r, tc)});
  }
  out.lhs = Concept::conj(rewrite(p.lhs, fn), tc);
  out.rhs = rewrite(p.rhs, fn);
  return out;
}

Problem relativizeBottom(const Problem& p) {
  const std::string f = unusedName("f", takenNames(p));
  const Concept fc = Concept::atom(f);
  const Rewriter fn = [&](const Concept& c, std::vector<Concept> kids) {
    if (isConstantOp(c, false)) return fc;
    if (c.kind() == Concept::Kind::Forall) {
      return Concept::forall(c.name(), Concept::disj(std::move(kids[0]), fc));
    }
    return rebuild(c, std::move(kids));
  };
  Problem out;
  out.declaredQuantifiers = p.declaredQuantifiers;
  for (const auto& ax : p.tbox) {
    out.tbox.push_back({rewrite(ax.lhs, fn), Concept::disj(rewrite(ax.rhs, fn), fc)});
  }
  if (quantifierOccurs(p, Concept::Kind::Exists)) {
    for (const auto& r : p.roles()) out.tbox.push_back({Concept::exists(r, fc), fc});
  }
  out.lhs = rewrite(p.lhs, fn);
  out.rhs = Concept::disj(rewrite(p.rhs, fn), fc);
  return out;
}

}  // namespace

Problem impToSubs(const PropFormula& phi, const PropFormula& psi) {
  Problem p;
  p.lhs = toConcept(phi);
  p.rhs = toConcept(psi);
  return p;
}

// ---------------------------------------------------------------------------
// TCSAT bridge

TcsatInstance subsToCoTcsat(const Problem& p) {
  return {p.tbox, Concept::conj(p.lhs, nnfNeg(p.rhs))};
}

Problem coTcsatToSubs(const TcsatInstance& inst) {
  Problem p;
  p.tbox = inst.tbox;
  p.lhs = inst.target;
  p.rhs = Concept::bottom();
  return p;
}

// ---------------------------------------------------------------------------
// Graphs

std::string vertexAtom(const std::string& vertex) { return "A_" + vertex; }

Problem gapToSubs(const DirectedGraph& g) {
  Problem p;
  for (const auto& [u, v] : g.edges) {
    p.tbox.push_back({Concept::atom(vertexAtom(u)), Concept::atom(vertexAtom(v))});
  }
  p.lhs = Concept::atom(vertexAtom(g.source));
  p.rhs = Concept::atom(vertexAtom(g.target));
  return p;
}

Problem hgapToSubs(const Hypergraph& h) {
  if (h.sources.empty()) throw Error("hypergraph needs at least one source");
  Problem p;
  for (const auto& e : h.edges) {
    p.tbox.push_back({Concept::conj(Concept::atom(vertexAtom(e.sources.first)),
                                    Concept::atom(vertexAtom(e.sources.second))),
                      Concept::atom(vertexAtom(e.destination))});
  }
  std::string source = *h.sources.begin();
  if (h.sources.size() > 1) {
    source = unusedName("s0", h.vertices);
    for (const auto& s : h.sources) {
      const auto a = Concept::atom(vertexAtom(source));
      p.tbox.push_back({Concept::conj(a, a), Concept::atom(vertexAtom(s))});
    }
  }
  p.lhs = Concept::atom(vertexAtom(source));
  p.rhs = Concept::atom(vertexAtom(h.target));
  return p;
}

namespace {

std::vector<std::string> splitWords(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

template <typename Fn>
void forEachLine(std::string_view text, Fn&& fn) {
  std::istringstream in{std::string(text)};
  std::size_t lineNo = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineNo;
    if (const auto pos = line.find_first_of("%#"); pos != std::string::npos) line.erase(pos);
    auto words = splitWords(line);
    if (!words.empty()) fn(words, lineNo);
  }
}

}  // namespace

DirectedGraph parseDirectedGraph(std::string_view text) {
  DirectedGraph g;
  bool haveSource = false, haveTarget = false;
  forEachLine(text, [&](const std::vector<std::string>& w, std::size_t lineNo) {
    if (w[0] == "source" || w[0] == "target") {
      if (w.size() != 2) throw ParseError(w[0] + " takes exactly one vertex", lineNo);
      (w[0] == "source" ? g.source : g.target) = w[1];
      (w[0] == "source" ? haveSource : haveTarget) = true;
      g.vertices.insert(w[1]);
      return;
    }
    if (w.size() == 1) {
      g.vertices.insert(w[0]);
      return;
    }
    if (w.size() != 2) throw ParseError("expected an edge 'u v'", lineNo);
    g.vertices.insert(w[0]);
    g.vertices.insert(w[1]);
    g.edges.emplace(w[0], w[1]);
  });
  if (!haveSource || !haveTarget) throw ParseError("graph needs a source and a target line");
  return g;
}

Hypergraph parseHypergraph(std::string_view text) {
  Hypergraph h;
  bool haveTarget = false;
  forEachLine(text, [&](const std::vector<std::string>& w, std::size_t lineNo) {
    if (w[0] == "source") {
      if (w.size() < 2) throw ParseError("source needs at least one vertex", lineNo);
      for (std::size_t i = 1; i < w.size(); ++i) {
        h.sources.insert(w[i]);
        h.vertices.insert(w[i]);
      }
      return;
    }
    if (w[0] == "target") {
      if (w.size() != 2) throw ParseError("target takes exactly one vertex", lineNo);
      h.target = w[1];
      h.vertices.insert(w[1]);
      haveTarget = true;
      return;
    }
    if (w.size() != 4 || w[2] != "->") throw ParseError("expected a hyperedge 'u1 u2 -> v'", lineNo);
    h.edges.push_back({{w[0], w[1]}, w[3]});
    h.vertices.insert({w[0], w[1], w[3]});
  });
  if (h.sources.empty() || !haveTarget) {
    throw ParseError("hypergraph needs a source and a target line");
  }
  return h;
}

std::string toString(const DirectedGraph& g) {
  std::ostringstream out;
  out << "source " << g.source << "\ntarget " << g.target << '\n';
  for (const auto& v : g.vertices) out << v << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::string toString(const Hypergraph& h) {
  std::ostringstream out;
  out << "source";
  for (const auto& s : h.sources) out << ' ' << s;
  out << "\ntarget " << h.target << '\n';
  for (const auto& e : h.edges) {
    out << e.sources.first << ' ' << e.sources.second << " -> " << e.destination << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Base change

Problem baseChange(const Problem& p, const std::vector<Operator>& targetBase) {
  std::vector<BoolFun> funs;
  for (const auto& op : targetBase) funs.push_back(op.fun);

  std::map<Operator, Circuit> circuits;
  for (const auto& op : p.signature().operators) {
    circuits.emplace(op, synthesizeCircuit(op.fun, funs));
  }
  const Concept dummy = Concept::atom(unusedName("z", takenNames(p)));

  std::function<Concept(const Circuit&, const std::vector<Concept>&)> instantiate =
      [&](const Circuit& circ, const std::vector<Concept>& args) -> Concept {
    if (circ.isProjection()) {
      return args.empty() ? dummy : args.at(circ.projectionIndex());
    }
    std::vector<Concept> kids;
    for (const auto& ch : circ.children()) kids.push_back(instantiate(ch, args));
    return Concept::op(targetBase.at(circ.baseIndex()), std::move(kids));
  };

  const Rewriter fn = [&](const Concept& c, std::vector<Concept> kids) {
    if (c.kind() == Concept::Kind::NegAtom) {
      return instantiate(circuits.at(ops::neg()), {Concept::atom(c.name())});
    }
    if (c.kind() == Concept::Kind::Op) return instantiate(circuits.at(c.op()), kids);
    return rebuild(c, std::move(kids));
  };
  return mapProblem(p, fn);
}

// ---------------------------------------------------------------------------
// Constants

bool hasConstants(const Problem& p) {
  for (const auto& ax : p.tbox) {
    if (containsConstant(ax.lhs) || containsConstant(ax.rhs)) return true;
  }
  return containsConstant(p.lhs) || containsConstant(p.rhs);
}

Problem simulateConstants(const Problem& p, ConstantMode mode,
                          std::optional<std::span<const BoolFun>> base) {
  auto require = [&](CloneId c, const char* what) {
    if (base && !cloneContains(c, *base)) throw FragmentError(what);
  };
  if (mode == ConstantMode::ViaNegation) {
    require(CloneId::N2, "constant simulation via negation needs not in the clone");
    return constantsViaNegation(p);
  }
  Problem out = p;
  if (containsConstant(out, true)) {
    require(CloneId::E2, "simulating top needs and in the clone");
    out = relativizeTop(out);
  }
  if (containsConstant(out, false)) {
    require(CloneId::V2, "simulating bot needs or in the clone");
    out = relativizeBottom(out);
  }
  return out;
}

}  // namespace clonesub
