#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace clonesub::sat {

/// Literal encoding: variable v (0-based) is 2v, its negation 2v+1.
using Lit = std::uint32_t;
inline Lit pos(std::uint32_t v) { return 2 * v; }
inline Lit neg(std::uint32_t v) { return 2 * v + 1; }
inline Lit negate(Lit l) { return l ^ 1U; }
inline std::uint32_t var(Lit l) { return l >> 1; }

enum class Result { Sat, Unsat, Unknown };

/// A small CDCL solver: two watched literals, first-UIP learning, activity
/// based branching and Luby restarts. Enough for bounded model search.
class Solver {
 public:
  std::uint32_t newVar();
  std::uint32_t numVars() const noexcept { return static_cast<std::uint32_t>(assign_.size()); }

  /// Adds a clause; returns false when the formula became trivially unsat.
  bool addClause(std::vector<Lit> clause);

  Result solve(std::uint64_t maxConflicts);
  /// Value of a variable in the last model.
  bool value(std::uint32_t v) const { return model_[v]; }

 private:
  enum : std::int8_t { kFalse = -1, kUndef = 0, kTrue = 1 };

  std::int8_t litValue(Lit l) const {
    const auto a = assign_[var(l)];
    return (l & 1U) ? static_cast<std::int8_t>(-a) : a;
  }
  void enqueue(Lit l, int reason);
  int propagate();
  void analyze(int conflict, std::vector<Lit>& learnt, int& backLevel);
  void backtrack(int level);
  std::optional<std::uint32_t> pickBranch();
  void bump(std::uint32_t v);

  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<int>> watches_;  // per literal: clauses watching it
  std::vector<std::int8_t> assign_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<double> activity_;
  std::vector<bool> polarity_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trailLim_;
  std::size_t qhead_ = 0;
  double bumpInc_ = 1.0;
  bool unsat_ = false;
  std::vector<bool> model_;
  std::vector<bool> seen_;
};

}  // namespace clonesub::sat
