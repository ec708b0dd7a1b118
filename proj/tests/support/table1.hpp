#pragma once

// The 22 clone bases of the reference table, rebuilt here from their
// formulas rather than taken from the library's canonical bases.

#include <functional>
#include <string>
#include <vector>

#include "clonesub/boolfun.hpp"
#include "clonesub/clone.hpp"

namespace table1 {

using Fn = std::function<bool(const std::vector<bool>&)>;

inline clonesub::BoolFun make(unsigned arity, const Fn& fn) {
  std::uint64_t bits = 0;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << arity); ++row) {
    std::vector<bool> x(arity);
    for (unsigned i = 0; i < arity; ++i) x[i] = ((row >> (arity - 1 - i)) & 1U) != 0;
    if (fn(x)) bits |= std::uint64_t{1} << row;
  }
  return clonesub::BoolFun(arity, bits);
}

inline bool maj(bool a, bool b, bool c) { return (a && b) || (a && c) || (b && c); }

struct Entry {
  clonesub::CloneId clone;
  std::vector<clonesub::BoolFun> base;
};

inline std::vector<Entry> entries() {
  using clonesub::CloneId;
  const auto andF = make(2, [](auto& x) { return x[0] && x[1]; });
  const auto orF = make(2, [](auto& x) { return x[0] || x[1]; });
  const auto notF = make(1, [](auto& x) { return !x[0]; });
  const auto idF = make(1, [](auto& x) { return static_cast<bool>(x[0]); });
  const auto xorF = make(2, [](auto& x) { return x[0] != x[1]; });
  const auto eqF = make(2, [](auto& x) { return x[0] == x[1]; });
  const auto top = make(0, [](auto&) { return true; });
  const auto bot = make(0, [](auto&) { return false; });
  return {
      {CloneId::BF, {andF, notF}},
      {CloneId::S00, {make(3, [](auto& x) { return x[0] || (x[1] && x[2]); })}},
      {CloneId::S10, {make(3, [](auto& x) { return x[0] && (x[1] || x[2]); })}},
      {CloneId::D1, {make(3, [](auto& x) { return maj(x[0], x[1], !x[2]); })}},
      {CloneId::D2, {make(3, [](auto& x) { return maj(x[0], x[1], x[2]); })}},
      {CloneId::M0, {andF, orF, bot}},
      {CloneId::L, {xorF, top}},
      {CloneId::L0, {xorF}},
      {CloneId::L1, {eqF}},
      {CloneId::L2, {make(3, [](auto& x) { return (x[0] != x[1]) != x[2]; })}},
      {CloneId::L3, {make(3, [](auto& x) { return !((x[0] != x[1]) != x[2]); })}},
      {CloneId::V, {orF, top, bot}},
      {CloneId::V0, {orF, bot}},
      {CloneId::V2, {orF}},
      {CloneId::E, {andF, top, bot}},
      {CloneId::E0, {andF, bot}},
      {CloneId::E2, {andF}},
      {CloneId::N, {notF, top}},
      {CloneId::N2, {notF}},
      {CloneId::I0, {idF, bot}},
      {CloneId::I1, {idF, top}},
      {CloneId::I2, {idF}},
  };
}

}  // namespace table1
