#include <sstream>

#include "clonesub/error.hpp"
#include "clonesub/semantics.hpp"

namespace clonesub {

Interpretation::Interpretation(std::size_t domainSize) : size_(domainSize) {
  if (domainSize == 0) throw Error("an interpretation needs a non-empty domain");
}

void Interpretation::setAtom(const std::string& atom, ElementSet members) {
  if (members.size() != size_) throw Error("atom extension has the wrong domain size");
  atoms_[atom] = std::move(members);
}

void Interpretation::addToAtom(const std::string& atom, std::size_t element) {
  if (element >= size_) throw Error("element outside the domain");
  auto [it, inserted] = atoms_.try_emplace(atom, size_);
  it->second.set(element);
}

void Interpretation::addEdge(const std::string& role, std::size_t from, std::size_t to) {
  if (from >= size_ || to >= size_) throw Error("role edge outside the domain");
  auto [it, inserted] = roles_.try_emplace(role, size_, ElementSet(size_));
  it->second[from].set(to);
}

ElementSet Interpretation::atom(const std::string& name) const {
  const auto it = atoms_.find(name);
  return it == atoms_.end() ? ElementSet(size_) : it->second;
}

const std::vector<ElementSet>* Interpretation::successors(const std::string& role) const {
  const auto it = roles_.find(role);
  return it == roles_.end() ? nullptr : &it->second;
}

std::string Interpretation::toString() const {
  std::ostringstream out;
  out << "domain: " << size_ << '\n';
  for (const auto& [name, ext] : atoms_) {
    out << "atom " << name << ": {";
    bool first = true;
    for (auto x = ext.find_first(); x != ElementSet::npos; x = ext.find_next(x)) {
      out << (first ? "" : ",") << x;
      first = false;
    }
    out << "}\n";
  }
  for (const auto& [name, succ] : roles_) {
    out << "role " << name << ": {";
    bool first = true;
    for (std::size_t x = 0; x < size_; ++x) {
      for (auto y = succ[x].find_first(); y != ElementSet::npos; y = succ[x].find_next(y)) {
        out << (first ? "" : ",") << '(' << x << ',' << y << ')';
        first = false;
      }
    }
    out << "}\n";
  }
  return out.str();
}

ElementSet extension(const Concept& c, const Interpretation& interp) {
  const std::size_t n = interp.domainSize();
  switch (c.kind()) {
    case Concept::Kind::Atom: return interp.atom(c.name());
    case Concept::Kind::NegAtom: return ~interp.atom(c.name());
    case Concept::Kind::Exists:
    case Concept::Kind::Forall: {
      const ElementSet body = extension(c.body(), interp);
      const auto* succ = interp.successors(c.name());
      ElementSet out(n);
      for (std::size_t x = 0; x < n; ++x) {
        if (c.kind() == Concept::Kind::Exists) {
          out[x] = succ != nullptr && (*succ)[x].intersects(body);
        } else {
          out[x] = succ == nullptr || (*succ)[x].is_subset_of(body);
        }
      }
      return out;
    }
    case Concept::Kind::Op: break;
  }
  const BoolFun& f = c.op().fun;
  std::vector<ElementSet> args;
  args.reserve(c.children().size());
  for (const auto& ch : c.children()) args.push_back(extension(ch, interp));
  // Union over the true rows of f of the matching "minterm" element sets.
  ElementSet out(n);
  for (std::uint64_t row = 0; row < f.rows(); ++row) {
    if (!f(row)) continue;
    ElementSet term(n);
    term.set();
    for (unsigned i = 0; i < f.arity(); ++i) {
      if (BoolFun::argument(f.arity(), row, i)) {
        term &= args[i];
      } else {
        term -= args[i];
      }
    }
    out |= term;
  }
  return out;
}

bool satisfies(const Interpretation& interp, const Axiom& ax) {
  return extension(ax.lhs, interp).is_subset_of(extension(ax.rhs, interp));
}

bool satisfies(const Interpretation& interp, const TBox& tbox) {
  for (const auto& ax : tbox) {
    if (!satisfies(interp, ax)) return false;
  }
  return true;
}

bool isCountermodel(const Interpretation& interp, const Problem& p) {
  return satisfies(interp, p.tbox) &&
         !extension(p.lhs, interp).is_subset_of(extension(p.rhs, interp));
}

}  // namespace clonesub
