#include <deque>
#include <map>
#include <unordered_map>

#include "clonesub/error.hpp"
#include "clonesub/solvers.hpp"

namespace clonesub {

namespace {

// Completion over the normal forms
//   A1 ⊓ ... ⊓ An ⊑ B     A ⊑ ∃r.B     ∃r.A ⊑ B
// where B may be ⊥. Every complex subconcept gets a fresh name with a full
// definition, which is a conservative extension.
class Completion {
 public:
  static constexpr int kTop = 0;
  static constexpr int kBottom = 1;

  explicit Completion(const Problem& p) {
    names_ = 2;
    for (const auto& ax : p.tbox) conjunction({name(ax.lhs)}, name(ax.rhs));
    lhs_ = name(p.lhs);
    rhs_ = name(p.rhs);
  }

  bool run() {
    const std::size_t n = static_cast<std::size_t>(names_);
    subsumers_.assign(n, std::vector<char>(n, 0));
    predecessors_.assign(n, {});
    for (std::size_t i = 0; i < conj_.size(); ++i) {
      for (int a : conj_[i].lhs) conjIndex_[a].push_back(i);
    }
    for (int x = 0; x < names_; ++x) {
      add(x, x);
      add(x, kTop);
    }
    while (!work_.empty()) {
      const auto [x, a] = work_.front();
      work_.pop_front();
      process(x, a);
    }
    const auto& s = subsumers_[lhs_];
    return s[rhs_] != 0 || s[kBottom] != 0;
  }

 private:
  struct Conj {
    std::vector<int> lhs;
    int rhs;
  };

  int fresh() { return names_++; }

  void conjunction(std::vector<int> lhs, int rhs) {
    conj_.push_back({std::move(lhs), rhs});
  }

  int name(const Concept& c) {
    const std::string key = toString(c);
    if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
    const int id = define(c);
    cache_.emplace(key, id);
    return id;
  }

  int define(const Concept& c) {
    switch (c.kind()) {
      case Concept::Kind::Atom: return fresh();
      case Concept::Kind::NegAtom: throw FragmentError("EL completion: negated atom");
      case Concept::Kind::Forall: throw FragmentError("EL completion: universal quantifier");
      case Concept::Kind::Exists: {
        const int body = name(c.body());
        const int z = fresh();
        const int role = roleId(c.name());
        existsRight_[z].push_back({role, body});
        existsLeft_[body].push_back({role, z});
        return z;
      }
      case Concept::Kind::Op: break;
    }
    const BoolFun& f = c.op().fun;
    if (f.isConstant()) return (f.bits() & 1U) != 0 ? kTop : kBottom;
    if (!cloneAdmits(CloneId::E, f)) throw FragmentError("EL completion: operator outside E");
    std::vector<int> parts;
    for (unsigned i : f.essentialVariables()) parts.push_back(name(c.children()[i]));
    if (parts.size() == 1) return parts.front();
    const int z = fresh();
    for (int part : parts) conjunction({z}, part);
    conjunction(parts, z);
    return z;
  }

  int roleId(const std::string& r) {
    const auto [it, inserted] = roles_.try_emplace(r, static_cast<int>(roles_.size()));
    return it->second;
  }

  void add(int x, int a) {
    if (subsumers_[x][a]) return;
    subsumers_[x][a] = 1;
    work_.emplace_back(x, a);
  }

  void link(int x, int role, int y) {
    auto& preds = predecessors_[y];
    const auto edge = std::make_pair(role, x);
    for (const auto& e : preds) {
      if (e == edge) return;
    }
    preds.push_back(edge);
    const auto& sy = subsumers_[y];
    if (sy[kBottom]) add(x, kBottom);
    for (int a = 0; a < names_; ++a) {
      if (!sy[a]) continue;
      if (const auto it = existsLeft_.find(a); it != existsLeft_.end()) {
        for (const auto& [r, b] : it->second) {
          if (r == role) add(x, b);
        }
      }
    }
  }

  void process(int x, int a) {
    const auto& sx = subsumers_[x];
    if (const auto it = conjIndex_.find(a); it != conjIndex_.end()) {
      for (std::size_t i : it->second) {
        const auto& rule = conj_[i];
        bool all = true;
        for (int b : rule.lhs) all = all && sx[b] != 0;
        if (all) add(x, rule.rhs);
      }
    }
    if (const auto it = existsRight_.find(a); it != existsRight_.end()) {
      for (const auto& [role, b] : it->second) link(x, role, b);
    }
    // Snapshot: link() above may have grown predecessors_[x].
    const auto preds = predecessors_[x];
    for (const auto& [role, y] : preds) {
      if (a == kBottom) add(y, kBottom);
      if (const auto it = existsLeft_.find(a); it != existsLeft_.end()) {
        for (const auto& [r, b] : it->second) {
          if (r == role) add(y, b);
        }
      }
    }
  }

  int names_ = 0;
  int lhs_ = 0;
  int rhs_ = 0;
  std::unordered_map<std::string, int> cache_;
  std::map<std::string, int> roles_;
  std::vector<Conj> conj_;
  std::unordered_map<int, std::vector<std::size_t>> conjIndex_;
  // z ⊑ ∃r.b, keyed by z.
  std::unordered_map<int, std::vector<std::pair<int, int>>> existsRight_;
  // ∃r.a ⊑ z, keyed by a.
  std::unordered_map<int, std::vector<std::pair<int, int>>> existsLeft_;

  std::vector<std::vector<char>> subsumers_;
  std::vector<std::vector<std::pair<int, int>>> predecessors_;
  std::deque<std::pair<int, int>> work_;
};

}  // namespace

bool solveELCompletion(const Problem& p) {
  const auto sig = p.signature();
  if (sig.quantifiers.forall) throw FragmentError("EL completion does not accept forall");
  const auto fs = sig.functions();
  if (!cloneSubset(fs, CloneId::E)) throw FragmentError("EL completion needs operators inside E");
  Completion completion(p);
  return completion.run();
}

}  // namespace clonesub
