#include "sat.hpp"

#include <algorithm>

namespace clonesub::sat {

std::uint32_t Solver::newVar() {
  const auto v = numVars();
  assign_.push_back(kUndef);
  level_.push_back(0);
  reason_.push_back(-1);
  activity_.push_back(0.0);
  polarity_.push_back(false);
  seen_.push_back(false);
  watches_.emplace_back();
  watches_.emplace_back();
  return v;
}

bool Solver::addClause(std::vector<Lit> clause) {
  if (unsat_) return false;
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (std::size_t i = 1; i < clause.size(); ++i) {
    if (clause[i] == negate(clause[i - 1])) return true;  // tautology
  }
  // Clauses are only added at level 0: drop false literals, skip satisfied.
  std::vector<Lit> kept;
  for (const Lit l : clause) {
    const auto v = litValue(l);
    if (v == kTrue) return true;
    if (v == kUndef) kept.push_back(l);
  }
  clause = std::move(kept);
  if (clause.empty()) {
    unsat_ = true;
    return false;
  }
  if (clause.size() == 1) {
    const auto v = litValue(clause[0]);
    if (v == kFalse) {
      unsat_ = true;
      return false;
    }
    if (v == kUndef) {
      enqueue(clause[0], -1);
      if (propagate() >= 0) {
        unsat_ = true;
        return false;
      }
    }
    return true;
  }
  const int idx = static_cast<int>(clauses_.size());
  watches_[clause[0]].push_back(idx);
  watches_[clause[1]].push_back(idx);
  clauses_.push_back(std::move(clause));
  return true;
}

void Solver::enqueue(Lit l, int reason) {
  const auto v = var(l);
  assign_[v] = (l & 1U) ? kFalse : kTrue;
  level_[v] = static_cast<int>(trailLim_.size());
  reason_[v] = reason;
  trail_.push_back(l);
}

int Solver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    const Lit falseLit = negate(p);
    auto& ws = watches_[falseLit];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const int ci = ws[i];
      auto& c = clauses_[ci];
      if (c[0] == falseLit) std::swap(c[0], c[1]);
      if (litValue(c[0]) == kTrue) {
        ws[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (litValue(c[k]) != kFalse) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = ci;
      if (litValue(c[0]) == kFalse) {
        for (std::size_t j = i + 1; j < ws.size(); ++j) ws[keep++] = ws[j];
        ws.resize(keep);
        return ci;
      }
      enqueue(c[0], ci);
    }
    ws.resize(keep);
  }
  return -1;
}

void Solver::bump(std::uint32_t v) {
  activity_[v] += bumpInc_;
  if (activity_[v] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    bumpInc_ *= 1e-100;
  }
}

void Solver::analyze(int conflict, std::vector<Lit>& learnt, int& backLevel) {
  learnt.assign(1, 0);
  const int current = static_cast<int>(trailLim_.size());
  int pathCount = 0;
  Lit p = 0;
  bool first = true;
  std::size_t index = trail_.size();
  int reason = conflict;
  do {
    const auto& c = clauses_[reason];
    for (std::size_t j = first ? 0 : 1; j < c.size(); ++j) {
      const auto v = var(c[j]);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = true;
      bump(v);
      if (level_[v] >= current) {
        ++pathCount;
      } else {
        learnt.push_back(c[j]);
      }
    }
    first = false;
    while (!seen_[var(trail_[--index])]) {
    }
    p = trail_[index];
    reason = reason_[var(p)];
    seen_[var(p)] = false;
    --pathCount;
    // The reason clause of p has p in position 0 (it was propagated there).
  } while (pathCount > 0);
  learnt[0] = negate(p);

  backLevel = 0;
  std::size_t maxI = 1;
  for (std::size_t i = 1; i < learnt.size(); ++i) {
    if (level_[var(learnt[i])] > backLevel) {
      backLevel = level_[var(learnt[i])];
      maxI = i;
    }
  }
  if (learnt.size() > 1) std::swap(learnt[1], learnt[maxI]);
  for (const Lit l : learnt) seen_[var(l)] = false;
  bumpInc_ *= 1.05;
}

void Solver::backtrack(int level) {
  if (static_cast<int>(trailLim_.size()) <= level) return;
  for (std::size_t i = trail_.size(); i > trailLim_[level]; --i) {
    const auto v = var(trail_[i - 1]);
    polarity_[v] = assign_[v] == kTrue;
    assign_[v] = kUndef;
    reason_[v] = -1;
  }
  trail_.resize(trailLim_[level]);
  trailLim_.resize(level);
  qhead_ = trail_.size();
}

std::optional<std::uint32_t> Solver::pickBranch() {
  std::optional<std::uint32_t> best;
  for (std::uint32_t v = 0; v < numVars(); ++v) {
    if (assign_[v] != kUndef) continue;
    if (!best || activity_[v] > activity_[*best]) best = v;
  }
  return best;
}

namespace {
std::uint64_t luby(std::uint64_t i) {
  // i is 1-based.
  std::uint64_t k = 1;
  while ((std::uint64_t{1} << k) - 1 < i) ++k;
  while (i != (std::uint64_t{1} << k) - 1) {
    i -= (std::uint64_t{1} << (k - 1)) - 1;
    k = 1;
    while ((std::uint64_t{1} << k) - 1 < i) ++k;
  }
  return std::uint64_t{1} << (k - 1);
}
}  // namespace

Result Solver::solve(std::uint64_t maxConflicts) {
  if (unsat_) return Result::Unsat;
  if (propagate() >= 0) {
    unsat_ = true;
    return Result::Unsat;
  }
  std::uint64_t conflicts = 0;
  std::uint64_t restartIndex = 1;
  std::uint64_t untilRestart = 100 * luby(restartIndex);
  std::vector<Lit> learnt;
  while (true) {
    const int conflict = propagate();
    if (conflict >= 0) {
      if (trailLim_.empty()) {
        unsat_ = true;
        return Result::Unsat;
      }
      if (++conflicts > maxConflicts) {
        backtrack(0);
        return Result::Unknown;
      }
      int backLevel = 0;
      analyze(conflict, learnt, backLevel);
      backtrack(backLevel);
      if (learnt.size() == 1) {
        enqueue(learnt[0], -1);
      } else {
        const int idx = static_cast<int>(clauses_.size());
        watches_[learnt[0]].push_back(idx);
        watches_[learnt[1]].push_back(idx);
        clauses_.push_back(learnt);
        enqueue(learnt[0], idx);
      }
      if (--untilRestart == 0) {
        untilRestart = 100 * luby(++restartIndex);
        backtrack(0);
      }
      continue;
    }
    const auto v = pickBranch();
    if (!v) {
      model_.assign(numVars(), false);
      for (std::uint32_t i = 0; i < numVars(); ++i) model_[i] = assign_[i] == kTrue;
      backtrack(0);
      return Result::Sat;
    }
    trailLim_.push_back(trail_.size());
    enqueue(polarity_[*v] ? pos(*v) : neg(*v), -1);
  }
}

}  // namespace clonesub::sat
