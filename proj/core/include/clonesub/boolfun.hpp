#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clonesub {

/// A Boolean function {0,1}^n -> {0,1} stored as a truth table.
///
/// Row i of the table holds the value on the assignment whose binary encoding
/// is i with x1 as the most significant bit, so x∧y is "0001" and x→y is
/// "1101". Bit i of bits() is row i.
class BoolFun {
 public:
  static constexpr unsigned kMaxArity = 6;

  /// The 0-ary constant ⊥.
  BoolFun() = default;
  BoolFun(unsigned arity, std::uint64_t bits);

  /// Parses a '0'/'1' string whose length is a power of two.
  static BoolFun fromString(std::string_view table);
  static BoolFun constant(bool value, unsigned arity = 0);
  /// The projection onto variable `index` (0-based) of an `arity`-ary function.
  static BoolFun projection(unsigned arity, unsigned index);

  unsigned arity() const noexcept { return arity_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::uint64_t rows() const noexcept { return std::uint64_t{1} << arity_; }
  std::uint64_t rowMask() const noexcept;

  bool operator()(std::uint64_t row) const noexcept { return (bits_ >> row) & 1U; }
  bool evaluate(std::span<const bool> args) const;

  /// Value of variable `var` (0-based) in row `row` of an `arity`-ary table.
  static bool argument(unsigned arity, std::uint64_t row, unsigned var) noexcept {
    return (row >> (arity - 1 - var)) & 1U;
  }

  std::string toString() const;

  /// g(x1..xn) = ¬f(¬x1..¬xn).
  BoolFun dual() const;
  /// The same function viewed as k-ary, with dummy variables appended last.
  BoolFun padded(unsigned k) const;

  bool dependsOn(unsigned var) const;
  std::vector<unsigned> essentialVariables() const;

  bool isConstant() const noexcept;
  bool preservesZero() const noexcept { return !(*this)(0); }
  bool preservesOne() const noexcept { return (*this)(rows() - 1); }
  bool isMonotone() const;
  bool isSelfDual() const;
  /// Algebraic normal form of degree at most one.
  bool isAffine() const;
  /// Some variable equals `c` on every row where the function equals `c`.
  bool isSeparating(bool c) const;
  std::optional<unsigned> projectionIndex() const;

  friend bool operator==(const BoolFun&, const BoolFun&) = default;
  friend auto operator<=>(const BoolFun&, const BoolFun&) = default;

 private:
  unsigned arity_ = 0;
  std::uint64_t bits_ = 0;
};

struct BoolFunHash {
  std::size_t operator()(const BoolFun& f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits() * 31 + f.arity());
  }
};

namespace fns {
BoolFun conj();   // x∧y
BoolFun disj();   // x∨y
BoolFun neg();    // ¬x
BoolFun exclusiveOr();  // x⊕y
BoolFun equivalence();  // x↔y
BoolFun top();
BoolFun bot();
BoolFun id();
BoolFun maj();
}  // namespace fns

/// A derivation term over a base: a projection or a base function applied to
/// sub-circuits. Sub-circuits are shared, so a circuit is a DAG.
class Circuit {
 public:
  static Circuit projection(unsigned index);
  static Circuit apply(std::size_t baseIndex, std::vector<Circuit> children);

  bool isProjection() const noexcept;
  unsigned projectionIndex() const;
  std::size_t baseIndex() const;
  const std::vector<Circuit>& children() const;

  /// Pointwise evaluation as a k-ary function over `base`.
  BoolFun evaluate(std::span<const BoolFun> base, unsigned k) const;
  /// Number of base-function applications (shared nodes counted once per use).
  std::size_t size() const;
  std::string toString(std::span<const std::string> baseNames = {}) const;

 private:
  struct Node;
  explicit Circuit(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ClosureLimits {
  unsigned maxArity = 4;
  /// Cap on composition steps (tuples of members fed to a base function).
  std::uint64_t maxCompositions = 200'000'000;
};

/// All k-ary members of a clone [B], each with a witnessing circuit.
class ClosureFragment {
 public:
  unsigned arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return functions_.size(); }
  const std::vector<BoolFun>& functions() const noexcept { return functions_; }

  /// Accepts functions of arity <= arity(); they are padded before lookup.
  bool contains(const BoolFun& f) const;
  const Circuit* witness(const BoolFun& f) const;

 private:
  friend ClosureFragment closureFragment(std::span<const BoolFun>, unsigned, const ClosureLimits&);
  unsigned arity_ = 0;
  std::vector<BoolFun> functions_;
  std::vector<Circuit> witnesses_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Least set of k-ary functions holding the k projections and closed under
/// every base function, computed as a semi-naive worklist fixpoint.
/// Throws ResourceError above the limits.
ClosureFragment closureFragment(std::span<const BoolFun> base, unsigned k,
                                const ClosureLimits& limits = {});

/// A circuit over `base` computing `target`. Constants are synthesized as
/// unary circuits. Throws NotExpressibleError when target ∉ [base].
Circuit synthesizeCircuit(const BoolFun& target, std::span<const BoolFun> base,
                          const ClosureLimits& limits = {});

}  // namespace clonesub
