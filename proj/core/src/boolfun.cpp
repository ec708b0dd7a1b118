#include "clonesub/boolfun.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "clonesub/error.hpp"

namespace clonesub {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line == 0 ? what
                      : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                            ": " + what),
      line_(line),
      column_(column) {}

BoolFun::BoolFun(unsigned arity, std::uint64_t bits) : arity_(arity), bits_(bits) {
  if (arity > kMaxArity) {
    throw Error("Boolean function arity " + std::to_string(arity) + " exceeds the maximum of " +
                std::to_string(kMaxArity));
  }
  bits_ &= rowMask();
}

std::uint64_t BoolFun::rowMask() const noexcept {
  return arity_ == kMaxArity ? ~std::uint64_t{0} : (std::uint64_t{1} << rows()) - 1;
}

BoolFun BoolFun::fromString(std::string_view table) {
  const auto n = table.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw ParseError("truth table '" + std::string(table) + "' must have power-of-two length");
  }
  const auto arity = static_cast<unsigned>(std::countr_zero(n));
  if (arity > kMaxArity) {
    throw ParseError("truth table '" + std::string(table) + "' exceeds arity " +
                     std::to_string(kMaxArity));
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (table[i] != '0') {
      throw ParseError("truth table '" + std::string(table) + "' may only contain 0 and 1");
    }
  }
  return BoolFun(arity, bits);
}

BoolFun BoolFun::constant(bool value, unsigned arity) {
  return BoolFun(arity, value ? ~std::uint64_t{0} : 0);
}

BoolFun BoolFun::projection(unsigned arity, unsigned index) {
  if (index >= arity) throw Error("projection index out of range");
  std::uint64_t bits = 0;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << arity); ++row) {
    if (argument(arity, row, index)) bits |= std::uint64_t{1} << row;
  }
  return BoolFun(arity, bits);
}

bool BoolFun::evaluate(std::span<const bool> args) const {
  if (args.size() != arity_) throw Error("argument count does not match arity");
  std::uint64_t row = 0;
  for (bool a : args) row = (row << 1) | (a ? 1U : 0U);
  return (*this)(row);
}

std::string BoolFun::toString() const {
  std::string s(rows(), '0');
  for (std::uint64_t i = 0; i < rows(); ++i) {
    if ((*this)(i)) s[i] = '1';
  }
  return s;
}

BoolFun BoolFun::dual() const {
  // Row i of the dual is the negation of row (¬i).
  std::uint64_t bits = 0;
  const auto last = rows() - 1;
  for (std::uint64_t i = 0; i < rows(); ++i) {
    if (!(*this)(last ^ i)) bits |= std::uint64_t{1} << i;
  }
  return BoolFun(arity_, bits);
}

BoolFun BoolFun::padded(unsigned k) const {
  if (k < arity_) throw Error("cannot pad a function to a smaller arity");
  if (k == arity_) return *this;
  std::uint64_t bits = 0;
  const unsigned shift = k - arity_;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << k); ++row) {
    if ((*this)(row >> shift)) bits |= std::uint64_t{1} << row;
  }
  return BoolFun(k, bits);
}

bool BoolFun::dependsOn(unsigned var) const {
  if (var >= arity_) return false;
  const std::uint64_t flip = std::uint64_t{1} << (arity_ - 1 - var);
  for (std::uint64_t row = 0; row < rows(); ++row) {
    if ((*this)(row) != (*this)(row ^ flip)) return true;
  }
  return false;
}

std::vector<unsigned> BoolFun::essentialVariables() const {
  std::vector<unsigned> vars;
  for (unsigned v = 0; v < arity_; ++v) {
    if (dependsOn(v)) vars.push_back(v);
  }
  return vars;
}

bool BoolFun::isConstant() const noexcept { return bits_ == 0 || bits_ == rowMask(); }

bool BoolFun::isMonotone() const {
  for (std::uint64_t row = 0; row < rows(); ++row) {
    if (!(*this)(row)) continue;
    // Raising any argument of a true row must keep it true.
    for (unsigned b = 0; b < arity_; ++b) {
      const std::uint64_t up = row | (std::uint64_t{1} << b);
      if (!(*this)(up)) return false;
    }
  }
  return true;
}

bool BoolFun::isSelfDual() const { return *this == dual(); }

bool BoolFun::isAffine() const {
  // Möbius transform yields the ANF coefficients indexed like rows.
  std::vector<std::uint8_t> anf(rows());
  for (std::uint64_t i = 0; i < rows(); ++i) anf[i] = (*this)(i) ? 1 : 0;
  for (unsigned b = 0; b < arity_; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t i = 0; i < rows(); ++i) {
      if (i & bit) anf[i] ^= anf[i ^ bit];
    }
  }
  for (std::uint64_t i = 0; i < rows(); ++i) {
    if (anf[i] && std::popcount(i) > 1) return false;
  }
  return true;
}

bool BoolFun::isSeparating(bool c) const {
  bool any = false;
  for (std::uint64_t row = 0; row < rows(); ++row) any |= ((*this)(row) == c);
  if (!any) return true;
  for (unsigned v = 0; v < arity_; ++v) {
    bool ok = true;
    for (std::uint64_t row = 0; row < rows() && ok; ++row) {
      if ((*this)(row) == c && argument(arity_, row, v) != c) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

std::optional<unsigned> BoolFun::projectionIndex() const {
  for (unsigned v = 0; v < arity_; ++v) {
    if (*this == projection(arity_, v)) return v;
  }
  return std::nullopt;
}

namespace fns {
BoolFun conj() { return BoolFun::fromString("0001"); }
BoolFun disj() { return BoolFun::fromString("0111"); }
BoolFun neg() { return BoolFun::fromString("10"); }
BoolFun exclusiveOr() { return BoolFun::fromString("0110"); }
BoolFun equivalence() { return BoolFun::fromString("1001"); }
BoolFun top() { return BoolFun::constant(true); }
BoolFun bot() { return BoolFun::constant(false); }
BoolFun id() { return BoolFun::fromString("01"); }
BoolFun maj() { return BoolFun::fromString("00010111"); }
}  // namespace fns

// ---------------------------------------------------------------------------
// Circuit

struct Circuit::Node {
  bool isProjection = true;
  unsigned index = 0;  // projection index or base index
  std::vector<Circuit> children;
};

Circuit Circuit::projection(unsigned index) {
  auto node = std::make_shared<Node>();
  node->isProjection = true;
  node->index = index;
  return Circuit(std::move(node));
}

Circuit Circuit::apply(std::size_t baseIndex, std::vector<Circuit> children) {
  auto node = std::make_shared<Node>();
  node->isProjection = false;
  node->index = static_cast<unsigned>(baseIndex);
  node->children = std::move(children);
  return Circuit(std::move(node));
}

bool Circuit::isProjection() const noexcept { return node_->isProjection; }

unsigned Circuit::projectionIndex() const {
  if (!node_->isProjection) throw Error("circuit node is not a projection");
  return node_->index;
}

std::size_t Circuit::baseIndex() const {
  if (node_->isProjection) throw Error("circuit node is a projection");
  return node_->index;
}

const std::vector<Circuit>& Circuit::children() const { return node_->children; }

BoolFun Circuit::evaluate(std::span<const BoolFun> base, unsigned k) const {
  if (node_->isProjection) return BoolFun::projection(k, node_->index);
  const BoolFun& g = base[node_->index];
  std::vector<BoolFun> args;
  args.reserve(node_->children.size());
  for (const auto& c : node_->children) args.push_back(c.evaluate(base, k));
  std::uint64_t bits = 0;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << k); ++row) {
    std::uint64_t inner = 0;
    for (const auto& a : args) inner = (inner << 1) | (a(row) ? 1U : 0U);
    if (g(inner)) bits |= std::uint64_t{1} << row;
  }
  return BoolFun(k, bits);
}

std::size_t Circuit::size() const {
  if (node_->isProjection) return 0;
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.size();
  return n;
}

std::string Circuit::toString(std::span<const std::string> baseNames) const {
  if (node_->isProjection) return "x" + std::to_string(node_->index + 1);
  std::ostringstream out;
  if (node_->index < baseNames.size()) {
    out << baseNames[node_->index];
  } else {
    out << "f" << node_->index;
  }
  out << '(';
  for (std::size_t i = 0; i < node_->children.size(); ++i) {
    if (i) out << ", ";
    out << node_->children[i].toString(baseNames);
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------
// Closure

bool ClosureFragment::contains(const BoolFun& f) const { return witness(f) != nullptr; }

const Circuit* ClosureFragment::witness(const BoolFun& f) const {
  if (f.arity() > arity_) return nullptr;
  const auto it = index_.find(f.padded(arity_).bits());
  return it == index_.end() ? nullptr : &witnesses_[it->second];
}

namespace {

// Table of g(t_1, ..., t_m) where the t_i are k-ary tables, computed as the
// disjunction over g's true rows of the matching minterms.
std::uint64_t compose(const BoolFun& g, std::span<const std::uint64_t> args, std::uint64_t mask) {
  const unsigned m = g.arity();
  std::uint64_t result = 0;
  for (std::uint64_t row = 0; row < g.rows(); ++row) {
    if (!g(row)) continue;
    std::uint64_t term = mask;
    for (unsigned i = 0; i < m && term; ++i) {
      term &= BoolFun::argument(m, row, i) ? args[i] : ~args[i];
    }
    result |= term;
  }
  return result & mask;
}

}  // namespace

ClosureFragment closureFragment(std::span<const BoolFun> base, unsigned k,
                                const ClosureLimits& limits) {
  if (k < 1) throw Error("closure arity must be at least 1");
  if (k > limits.maxArity || k > BoolFun::kMaxArity) {
    throw ResourceError("closure arity " + std::to_string(k) + " exceeds the cap of " +
                        std::to_string(std::min(limits.maxArity, BoolFun::kMaxArity)));
  }

  ClosureFragment frag;
  frag.arity_ = k;
  const std::uint64_t mask = BoolFun::constant(true, k).bits();
  const std::size_t universe = std::size_t{1} << (std::size_t{1} << k);

  auto add = [&](std::uint64_t bits, Circuit witness) {
    if (frag.index_.contains(bits)) return;
    frag.index_.emplace(bits, frag.functions_.size());
    frag.functions_.emplace_back(k, bits);
    frag.witnesses_.push_back(std::move(witness));
  };

  for (unsigned i = 0; i < k; ++i) add(BoolFun::projection(k, i).bits(), Circuit::projection(i));
  for (std::size_t b = 0; b < base.size(); ++b) {
    if (base[b].arity() == 0) add(compose(base[b], {}, mask), Circuit::apply(b, {}));
  }

  std::uint64_t compositions = 0;
  std::size_t oldSize = 0;
  std::vector<std::size_t> tuple;
  std::vector<std::uint64_t> args;

  // Semi-naive rounds: each round only feeds tuples with at least one member
  // discovered in the previous round. Position j is the first "new" slot.
  while (oldSize < frag.functions_.size() && frag.functions_.size() < universe) {
    const std::size_t curSize = frag.functions_.size();
    for (std::size_t b = 0; b < base.size(); ++b) {
      const BoolFun& g = base[b];
      const unsigned m = g.arity();
      for (unsigned j = 0; j < m; ++j) {
        std::vector<std::size_t> lo(m), hi(m);
        for (unsigned p = 0; p < m; ++p) {
          lo[p] = (p == j) ? oldSize : 0;
          hi[p] = (p < j) ? oldSize : curSize;
        }
        bool empty = false;
        for (unsigned p = 0; p < m; ++p) empty |= lo[p] >= hi[p];
        if (empty) continue;

        tuple = lo;
        args.assign(m, 0);
        while (true) {
          if (++compositions > limits.maxCompositions) {
            throw ResourceError("closure computation exceeded " +
                                std::to_string(limits.maxCompositions) + " compositions");
          }
          for (unsigned p = 0; p < m; ++p) args[p] = frag.functions_[tuple[p]].bits();
          const std::uint64_t bits = compose(g, args, mask);
          if (!frag.index_.contains(bits)) {
            std::vector<Circuit> kids;
            kids.reserve(m);
            for (unsigned p = 0; p < m; ++p) kids.push_back(frag.witnesses_[tuple[p]]);
            add(bits, Circuit::apply(b, std::move(kids)));
            if (frag.functions_.size() == universe) return frag;
          }
          // Odometer with the last position varying fastest.
          int p = static_cast<int>(m) - 1;
          while (p >= 0) {
            if (++tuple[p] < hi[p]) break;
            tuple[p] = lo[p];
            --p;
          }
          if (p < 0) break;
        }
      }
    }
    oldSize = curSize;
  }
  return frag;
}

Circuit synthesizeCircuit(const BoolFun& target, std::span<const BoolFun> base,
                          const ClosureLimits& limits) {
  const unsigned k = std::max(1U, target.arity());
  const auto frag = closureFragment(base, k, limits);
  const Circuit* w = frag.witness(target);
  if (w == nullptr) {
    throw NotExpressibleError("function " + target.toString() +
                              " is not in the clone generated by the base");
  }
  return *w;
}

}  // namespace clonesub
