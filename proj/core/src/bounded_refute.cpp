#include <map>
#include <unordered_map>

#include "clonesub/error.hpp"
#include "clonesub/semantics.hpp"
#include "sat.hpp"

namespace clonesub {

namespace {

using sat::Lit;

// Propositional encoding of "an interpretation with n elements that models T
// and has element 0 in C but not in D".
class ModelEncoder {
 public:
  ModelEncoder(const Problem& p, std::size_t n) : p_(p), n_(n) {
    for (const auto& a : p.atoms()) {
      auto& vars = atomVars_[a];
      for (std::size_t x = 0; x < n; ++x) vars.push_back(solver_.newVar());
    }
    for (const auto& r : p.roles()) {
      auto& vars = roleVars_[r];
      for (std::size_t i = 0; i < n * n; ++i) vars.push_back(solver_.newVar());
    }
  }

  sat::Solver& solver() { return solver_; }

  void encode() {
    for (const auto& ax : p_.tbox) {
      const auto& l = lits(ax.lhs);
      const auto& r = lits(ax.rhs);
      for (std::size_t x = 0; x < n_; ++x) solver_.addClause({sat::negate(l[x]), r[x]});
    }
    solver_.addClause({lits(p_.lhs)[0]});
    solver_.addClause({sat::negate(lits(p_.rhs)[0])});
  }

  Interpretation decode() const {
    Interpretation interp(n_);
    for (const auto& [atom, vars] : atomVars_) {
      ElementSet ext(n_);
      for (std::size_t x = 0; x < n_; ++x) ext[x] = solver_.value(vars[x]);
      interp.setAtom(atom, ext);
    }
    for (const auto& [role, vars] : roleVars_) {
      for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) {
          if (solver_.value(vars[x * n_ + y])) interp.addEdge(role, x, y);
        }
      }
    }
    return interp;
  }

 private:
  Lit edge(const std::string& role, std::size_t x, std::size_t y) const {
    return sat::pos(roleVars_.at(role)[x * n_ + y]);
  }

  // One literal per domain element stating membership in c.
  const std::vector<Lit>& lits(const Concept& c) {
    const std::string key = toString(c);
    if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::vector<Lit> out(n_);
    switch (c.kind()) {
      case Concept::Kind::Atom:
      case Concept::Kind::NegAtom: {
        const auto& vars = atomVars_.at(c.name());
        for (std::size_t x = 0; x < n_; ++x) {
          out[x] = c.kind() == Concept::Kind::Atom ? sat::pos(vars[x]) : sat::neg(vars[x]);
        }
        break;
      }
      case Concept::Kind::Op: encodeOp(c, out); break;
      case Concept::Kind::Exists:
      case Concept::Kind::Forall: encodeQuantifier(c, out); break;
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

  void encodeOp(const Concept& c, std::vector<Lit>& out) {
    const BoolFun& f = c.op().fun;
    std::vector<std::vector<Lit>> args;
    for (const auto& ch : c.children()) args.push_back(lits(ch));
    for (std::size_t x = 0; x < n_; ++x) {
      const Lit v = sat::pos(solver_.newVar());
      out[x] = v;
      for (std::uint64_t row = 0; row < f.rows(); ++row) {
        std::vector<Lit> clause;
        for (unsigned i = 0; i < f.arity(); ++i) {
          const Lit a = args[i][x];
          clause.push_back(BoolFun::argument(f.arity(), row, i) ? sat::negate(a) : a);
        }
        clause.push_back(f(row) ? v : sat::negate(v));
        solver_.addClause(std::move(clause));
      }
    }
  }

  void encodeQuantifier(const Concept& c, std::vector<Lit>& out) {
    const bool ex = c.kind() == Concept::Kind::Exists;
    const auto body = lits(c.body());
    for (std::size_t x = 0; x < n_; ++x) {
      const Lit v = sat::pos(solver_.newVar());
      out[x] = v;
      // aux_y ↔ r(x,y) ∧ body(y) for ∃, r(x,y) ∧ ¬body(y) for ∀.
      std::vector<Lit> witnesses;
      for (std::size_t y = 0; y < n_; ++y) {
        const Lit r = edge(c.name(), x, y);
        const Lit b = ex ? body[y] : sat::negate(body[y]);
        const Lit aux = sat::pos(solver_.newVar());
        solver_.addClause({sat::negate(aux), r});
        solver_.addClause({sat::negate(aux), b});
        solver_.addClause({sat::negate(r), sat::negate(b), aux});
        // ∃: aux → v.  ∀: aux → ¬v.
        solver_.addClause({sat::negate(aux), ex ? v : sat::negate(v)});
        witnesses.push_back(aux);
      }
      // ∃: v → some aux.  ∀: ¬v → some aux.
      witnesses.push_back(ex ? sat::negate(v) : v);
      solver_.addClause(std::move(witnesses));
    }
  }

  const Problem& p_;
  std::size_t n_;
  sat::Solver solver_;
  std::map<std::string, std::vector<std::uint32_t>> atomVars_;
  std::map<std::string, std::vector<std::uint32_t>> roleVars_;
  std::unordered_map<std::string, std::vector<Lit>> cache_;
};

}  // namespace

std::optional<Interpretation> boundedRefute(const Problem& p, std::size_t maxDomain,
                                            const RefuteOptions& options) {
  if (maxDomain < 1) throw Error("boundedRefute needs maxDomain >= 1");
  for (std::size_t n = 1; n <= maxDomain; ++n) {
    ModelEncoder enc(p, n);
    enc.encode();
    const auto result = enc.solver().solve(options.maxConflicts);
    if (result == sat::Result::Unknown) {
      throw ResourceError("countermodel search over " + std::to_string(n) +
                          " elements exceeded " + std::to_string(options.maxConflicts) +
                          " conflicts");
    }
    if (result == sat::Result::Sat) {
      Interpretation interp = enc.decode();
      if (!isCountermodel(interp, p)) {
        throw Error("internal error: decoded interpretation is not a countermodel");
      }
      return interp;
    }
  }
  return std::nullopt;
}

}  // namespace clonesub
