#include <algorithm>
#include <map>
#include <unordered_map>

#include "clonesub/error.hpp"
#include "clonesub/semantics.hpp"
#include "clonesub/syntax.hpp"

namespace clonesub {

namespace {

// A type is a valuation of the atoms and of the modal subconcepts (∃r.C and
// ∀r.C nodes); every other node of the closure is evaluated from those.
// Types violating an axiom are never generated. Elimination then removes
// types whose modal demands have no surviving witness.
class TypeEliminator {
 public:
  TypeEliminator(const TBox& tbox, const Concept& target, const TypeEliminationOptions& options)
      : options_(options) {
    for (const auto& ax : tbox) axioms_.emplace_back(intern(ax.lhs), intern(ax.rhs));
    target_ = intern(target);
    if (modals_.size() > 64) {
      throw ResourceError("type elimination supports at most 64 modal subconcepts, got " +
                          std::to_string(modals_.size()));
    }
    // Base variables in node order, so axiom checks fire as early as possible.
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].kind == Concept::Kind::Atom || isModal(nodes_[i])) baseOrder_.push_back(i);
    }
  }

  bool run(TypeEliminationStats* stats) {
    enumerate();
    std::vector<bool> alive(types_.size(), true);
    std::size_t aliveCount = types_.size();
    std::vector<std::size_t> history{aliveCount};
    std::size_t rounds = 0;

    while (true) {
      ++rounds;
      std::vector<std::uint64_t> masks;
      for (std::size_t t = 0; t < types_.size(); ++t) {
        if (alive[t]) masks.push_back(bodyMask_[t]);
      }
      std::sort(masks.begin(), masks.end());
      masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

      std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<std::uint64_t, std::uint64_t>>
          memo;
      auto witnesses = [&](std::uint64_t reqTrue, std::uint64_t reqFalse) {
        const auto key = std::make_pair(reqTrue, reqFalse);
        if (const auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t canBeTrue = 0, canBeFalse = 0;
        for (const auto m : masks) {
          if ((m & reqTrue) == reqTrue && (m & reqFalse) == 0) {
            canBeTrue |= m;
            canBeFalse |= ~m;
          }
        }
        return memo.emplace(key, std::make_pair(canBeTrue, canBeFalse)).first->second;
      };

      std::vector<std::size_t> doomed;
      for (std::size_t t = 0; t < types_.size(); ++t) {
        if (!alive[t]) continue;
        const auto& modalVals = modalValues_[t];
        bool ok = true;
        for (const auto& roleMask : roleMasks_) {
          const std::uint64_t trueHere = modalVals & roleMask;
          const std::uint64_t falseHere = ~modalVals & roleMask;
          const std::uint64_t reqTrue = trueHere & forallMask_;
          const std::uint64_t reqFalse = falseHere & existsMask_;
          const std::uint64_t needTrue = trueHere & existsMask_;
          const std::uint64_t needFalse = falseHere & forallMask_;
          if (needTrue == 0 && needFalse == 0) continue;
          const auto [canTrue, canFalse] = witnesses(reqTrue, reqFalse);
          if ((needTrue & ~canTrue) != 0 || (needFalse & ~canFalse) != 0) {
            ok = false;
            break;
          }
        }
        if (!ok) doomed.push_back(t);
      }
      for (auto t : doomed) alive[t] = false;
      aliveCount -= doomed.size();
      history.push_back(aliveCount);
      if (doomed.empty()) break;
    }

    bool satisfiable = false;
    for (std::size_t t = 0; t < types_.size() && !satisfiable; ++t) {
      satisfiable = alive[t] && types_[t][target_];
    }
    if (stats != nullptr) {
      stats->candidateTypes = types_.size();
      stats->survivingTypes = aliveCount;
      stats->rounds = rounds;
      stats->closureSize = nodes_.size();
      stats->history = std::move(history);
    }
    return satisfiable;
  }

 private:
  struct Node {
    Concept::Kind kind;
    std::size_t atom = 0;   // atom index
    std::size_t modal = 0;  // modal index
    BoolFun fun;
    std::vector<std::size_t> children;
  };

  static bool isModal(const Node& n) {
    return n.kind == Concept::Kind::Exists || n.kind == Concept::Kind::Forall;
  }

  std::size_t intern(const Concept& c) {
    std::string key = toString(c);
    if (const auto it = index_.find(key); it != index_.end()) return it->second;
    Node n{c.kind(), 0, 0, {}, {}};
    switch (c.kind()) {
      case Concept::Kind::Atom:
        n.atom = atomIndex(c.name());
        break;
      case Concept::Kind::NegAtom:
        // ¬A is evaluated as not(A).
        n.kind = Concept::Kind::Op;
        n.fun = fns::neg();
        n.children.push_back(intern(Concept::atom(c.name())));
        break;
      case Concept::Kind::Op:
        n.fun = c.op().fun;
        for (const auto& ch : c.children()) n.children.push_back(intern(ch));
        break;
      case Concept::Kind::Exists:
      case Concept::Kind::Forall: {
        n.children.push_back(intern(c.body()));
        n.modal = modals_.size();
        const auto role = roleIndex(c.name());
        modals_.push_back({role, n.children[0], c.kind() == Concept::Kind::Exists});
        break;
      }
    }
    const std::size_t id = nodes_.size();
    nodes_.push_back(std::move(n));
    index_.emplace(std::move(key), id);
    return id;
  }

  std::size_t atomIndex(const std::string& name) {
    const auto [it, inserted] = atoms_.try_emplace(name, atoms_.size());
    return it->second;
  }

  std::size_t roleIndex(const std::string& name) {
    const auto [it, inserted] = roles_.try_emplace(name, roles_.size());
    return it->second;
  }

  // Three-valued evaluation: 0, 1, or 2 for "not yet determined".
  std::uint8_t eval3(std::size_t id, std::vector<std::uint8_t>& memo) const {
    if (memo[id] != kUnknownMemo) return memo[id];
    const Node& n = nodes_[id];
    std::uint8_t v = 2;
    if (n.kind == Concept::Kind::Atom || isModal(n)) {
      v = partial_[id];
    } else {
      const unsigned m = n.fun.arity();
      std::vector<std::uint8_t> args(m);
      for (unsigned i = 0; i < m; ++i) args[i] = eval3(n.children[i], memo);
      bool seen0 = false, seen1 = false;
      for (std::uint64_t row = 0; row < n.fun.rows() && !(seen0 && seen1); ++row) {
        bool consistent = true;
        for (unsigned i = 0; i < m && consistent; ++i) {
          const auto bit = static_cast<std::uint8_t>(BoolFun::argument(m, row, i));
          consistent = args[i] == 2 || args[i] == bit;
        }
        if (!consistent) continue;
        (n.fun(row) ? seen1 : seen0) = true;
      }
      v = seen0 && seen1 ? 2 : (seen1 ? 1 : 0);
    }
    memo[id] = v;
    return v;
  }

  bool axiomsViolated() const {
    std::vector<std::uint8_t> memo(nodes_.size(), kUnknownMemo);
    for (const auto& [lhs, rhs] : axioms_) {
      if (eval3(lhs, memo) == 1 && eval3(rhs, memo) == 0) return true;
    }
    return false;
  }

  void enumerate() {
    partial_.assign(nodes_.size(), 2);
    for (std::size_t i = 0; i < modals_.size(); ++i) {
      const auto& md = modals_[i];
      if (md.exists) existsMask_ |= std::uint64_t{1} << i;
      else forallMask_ |= std::uint64_t{1} << i;
      if (roleMasks_.size() <= md.role) roleMasks_.resize(md.role + 1, 0);
      roleMasks_[md.role] |= std::uint64_t{1} << i;
    }
    dfs(0);
  }

  void dfs(std::size_t depth) {
    if (axiomsViolated()) return;
    if (depth == baseOrder_.size()) {
      if (types_.size() >= options_.maxTypes) {
        throw ResourceError("type elimination exceeded " + std::to_string(options_.maxTypes) +
                            " candidate types");
      }
      std::vector<std::uint8_t> memo(nodes_.size(), kUnknownMemo);
      std::vector<bool> vals(nodes_.size());
      for (std::size_t i = 0; i < nodes_.size(); ++i) vals[i] = eval3(i, memo) == 1;
      std::uint64_t modalVals = 0, bodies = 0;
      for (std::size_t i = 0; i < modals_.size(); ++i) {
        if (vals[nodeOfModal(i)]) modalVals |= std::uint64_t{1} << i;
        if (vals[modals_[i].body]) bodies |= std::uint64_t{1} << i;
      }
      types_.push_back(std::move(vals));
      modalValues_.push_back(modalVals);
      bodyMask_.push_back(bodies);
      return;
    }
    const std::size_t id = baseOrder_[depth];
    for (std::uint8_t v : {std::uint8_t{0}, std::uint8_t{1}}) {
      partial_[id] = v;
      dfs(depth + 1);
    }
    partial_[id] = 2;
  }

  std::size_t nodeOfModal(std::size_t modal) {
    if (modalNode_.empty()) {
      modalNode_.resize(modals_.size());
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (isModal(nodes_[i])) modalNode_[nodes_[i].modal] = i;
      }
    }
    return modalNode_[modal];
  }

  struct Modal {
    std::size_t role;
    std::size_t body;
    bool exists;
  };

  static constexpr std::uint8_t kUnknownMemo = 255;

  TypeEliminationOptions options_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<std::string, std::size_t> atoms_;
  std::map<std::string, std::size_t> roles_;
  std::vector<Modal> modals_;
  std::vector<std::size_t> modalNode_;
  std::vector<std::pair<std::size_t, std::size_t>> axioms_;
  std::size_t target_ = 0;
  std::vector<std::size_t> baseOrder_;
  std::vector<std::uint8_t> partial_;

  std::uint64_t existsMask_ = 0;
  std::uint64_t forallMask_ = 0;
  std::vector<std::uint64_t> roleMasks_;

  std::vector<std::vector<bool>> types_;
  std::vector<std::uint64_t> modalValues_;
  std::vector<std::uint64_t> bodyMask_;
};

}  // namespace

bool tcsatTypeElim(const TBox& tbox, const Concept& c, const TypeEliminationOptions& options,
                   TypeEliminationStats* stats) {
  TypeEliminator elim(tbox, c, options);
  return elim.run(stats);
}

bool generalSubsumes(const Problem& p, const TypeEliminationOptions& options) {
  return !tcsatTypeElim(p.tbox, Concept::conj(p.lhs, nnfNeg(p.rhs)), options);
}

}  // namespace clonesub
