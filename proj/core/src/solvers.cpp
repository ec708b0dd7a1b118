#include "clonesub/solvers.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "clonesub/error.hpp"
#include "clonesub/syntax.hpp"

namespace clonesub {

namespace {

void requireQF(const Problem& p, CloneId within, const char* solver) {
  const auto sig = p.signature();
  if (!sig.quantifiers.empty()) {
    throw FragmentError(std::string(solver) + " does not accept quantifiers");
  }
  const auto fs = sig.functions();
  if (!cloneSubset(fs, within)) {
    throw FragmentError(std::string(solver) + " needs operators inside " +
                        std::string(cloneName(within)));
  }
}

// ---------------------------------------------------------------------------
// Implication graph

// Node 0 is ⊤ and node 1 is ⊥; atom k has nodes 2k+2 (A) and 2k+3 (¬A).
// Negation is xor 1.
class LiteralIndex {
 public:
  int node(const Concept& c) {
    switch (c.kind()) {
      case Concept::Kind::Atom: return atomNode(c.name());
      case Concept::Kind::NegAtom: return atomNode(c.name()) ^ 1;
      case Concept::Kind::Exists:
      case Concept::Kind::Forall: throw FragmentError("implication graph: quantifier");
      case Concept::Kind::Op: break;
    }
    const BoolFun& f = c.op().fun;
    if (f.isConstant()) return f.bits() & 1U ? 0 : 1;
    const auto ess = f.essentialVariables();
    if (ess.size() != 1) throw FragmentError("implication graph: operator outside N");
    const unsigned i = ess.front();
    // f restricted to x_i: identity if f is true on the all-ones row.
    const bool identity = f.preservesOne();
    const int child = node(c.children()[i]);
    return identity ? child : child ^ 1;
  }

  std::size_t size() const { return 2 * atoms_.size() + 2; }

 private:
  int atomNode(const std::string& name) {
    const auto [it, inserted] = atoms_.try_emplace(name, static_cast<int>(atoms_.size()));
    return 2 * it->second + 2;
  }
  std::unordered_map<std::string, int> atoms_;
};

// True iff some node shares a strongly connected component with its negation.
bool hasComplementaryScc(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> onStack(n, false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0, comps = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    onStack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < adj[v].size()) {
        const int w = adj[v][next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          onStack[w] = true;
          call.emplace_back(w, 0);
        } else if (onStack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w = -1;
        do {
          w = stack.back();
          stack.pop_back();
          onStack[w] = false;
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  for (int v = 0; v < n; v += 2) {
    if (comp[v] == comp[v + 1]) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Conjunctive closure

struct ConjSet {
  bool bottom = false;
  std::vector<int> atoms;
};

class ConjNormalizer {
 public:
  ConjSet normalize(const Concept& c) {
    ConjSet out;
    collect(c, out);
    std::sort(out.atoms.begin(), out.atoms.end());
    out.atoms.erase(std::unique(out.atoms.begin(), out.atoms.end()), out.atoms.end());
    return out;
  }

  std::size_t atomCount() const { return atoms_.size(); }

 private:
  void collect(const Concept& c, ConjSet& out) {
    switch (c.kind()) {
      case Concept::Kind::Atom: {
        const auto [it, inserted] =
            atoms_.try_emplace(c.name(), static_cast<int>(atoms_.size()));
        out.atoms.push_back(it->second);
        return;
      }
      case Concept::Kind::NegAtom: throw FragmentError("conjunctive closure: negated atom");
      case Concept::Kind::Exists:
      case Concept::Kind::Forall: throw FragmentError("conjunctive closure: quantifier");
      case Concept::Kind::Op: break;
    }
    const BoolFun& f = c.op().fun;
    if (f.isConstant()) {
      if ((f.bits() & 1U) == 0) out.bottom = true;
      return;
    }
    if (!cloneAdmits(CloneId::E, f)) throw FragmentError("conjunctive closure: operator outside E");
    for (unsigned i : f.essentialVariables()) collect(c.children()[i], out);
  }

  std::unordered_map<std::string, int> atoms_;
};

}  // namespace

bool solveQFImplicationGraph(const Problem& p) {
  requireQF(p, CloneId::N, "implication graph");
  LiteralIndex idx;
  std::vector<std::pair<int, int>> edges;
  for (const auto& ax : p.tbox) edges.emplace_back(idx.node(ax.lhs), idx.node(ax.rhs));
  const int c = idx.node(p.lhs);
  const int d = idx.node(p.rhs);

  std::vector<std::vector<int>> adj(idx.size());
  auto implies = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b ^ 1].push_back(a ^ 1);
  };
  for (const auto& [a, b] : edges) implies(a, b);
  implies(1, 0);      // ⊤ holds everywhere
  implies(c ^ 1, c);  // the countermodel point is in C
  implies(d, d ^ 1);  // ... and not in D
  // A contradiction means no countermodel point exists: C ⇝ D, C ⇝ ¬C,
  // ¬D ⇝ D, or T itself inconsistent.
  return hasComplementaryScc(adj);
}

bool solveQFConjClosure(const Problem& p) {
  requireQF(p, CloneId::E, "conjunctive closure");
  ConjNormalizer norm;
  struct Rule {
    ConjSet lhs, rhs;
  };
  std::vector<Rule> rules;
  rules.reserve(p.tbox.size());
  for (const auto& ax : p.tbox) rules.push_back({norm.normalize(ax.lhs), norm.normalize(ax.rhs)});
  const ConjSet c = norm.normalize(p.lhs);
  const ConjSet d = norm.normalize(p.rhs);
  if (c.bottom) return true;

  const std::size_t n = norm.atomCount();
  std::vector<std::vector<std::size_t>> watchers(n);
  std::vector<std::size_t> missing(rules.size());
  std::vector<char> derived(n, 0);
  std::vector<int> queue;
  bool inconsistent = false;

  auto derive = [&](int a) {
    if (!derived[a]) {
      derived[a] = 1;
      queue.push_back(a);
    }
  };
  auto fire = [&](const Rule& r) {
    if (r.rhs.bottom) inconsistent = true;
    for (int a : r.rhs.atoms) derive(a);
  };

  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].lhs.bottom) continue;  // ⊥ ⊑ F is vacuous
    missing[i] = rules[i].lhs.atoms.size();
    for (int a : rules[i].lhs.atoms) watchers[a].push_back(i);
    if (missing[i] == 0) fire(rules[i]);
  }
  for (int a : c.atoms) derive(a);
  while (!queue.empty() && !inconsistent) {
    const int a = queue.back();
    queue.pop_back();
    for (std::size_t i : watchers[a]) {
      if (--missing[i] == 0) fire(rules[i]);
    }
  }
  if (inconsistent) return true;
  if (d.bottom) return false;
  return std::all_of(d.atoms.begin(), d.atoms.end(), [&](int a) { return derived[a] != 0; });
}

bool solveQFTruthTable(const Problem& p) {
  if (!p.signature().quantifiers.empty()) {
    throw FragmentError("truth table does not accept quantifiers");
  }
  return propEntails(p);
}

bool solveForallDisj(const Problem& p) {
  const auto sig = p.signature();
  if (sig.quantifiers.exists) throw FragmentError("dual EL does not accept exists");
  const auto fs = sig.functions();
  if (!cloneSubset(fs, CloneId::V)) throw FragmentError("dual EL needs operators inside V");
  return solveELCompletion(dualizeInstance(p));
}

}  // namespace clonesub
