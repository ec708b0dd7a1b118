#include "clonesub/generator.hpp"

#include "clonesub/error.hpp"

namespace clonesub {

ConceptSampler::ConceptSampler(const GeneratorConfig& config) : config_(config), rng_(config.seed) {
  if (config.clone == CloneId::Other) throw Error("generator needs a named clone");
  if (config.atoms == 0) throw Error("generator needs at least one atom");
  for (const auto& nf : canonicalBase(config.clone)) operators_.push_back({nf.name, nf.fun});
}

std::uint64_t ConceptSampler::below(std::uint64_t n) { return rng_() % n; }

Concept ConceptSampler::sample(unsigned depth, unsigned roleDepth) {
  std::vector<const Operator*> constants, connectives;
  for (const auto& op : operators_) (op.arity() == 0 ? constants : connectives).push_back(&op);
  const auto& q = config_.quantifiers;
  const bool quantify = roleDepth > 0 && !q.empty() && config_.roles > 0;

  if (depth == 0 || below(10) < 3) {
    if (!constants.empty() && below(8) == 0) {
      return Concept::op(*constants[below(constants.size())], {});
    }
    return Concept::atom("A" + std::to_string(below(config_.atoms)));
  }
  if (quantify && below(3) == 0) {
    const std::string role = "r" + std::to_string(below(config_.roles));
    bool exists = q.exists;
    if (q.exists && q.forall) exists = below(2) == 0;
    Concept body = sample(depth - 1, roleDepth - 1);
    return exists ? Concept::exists(role, std::move(body)) : Concept::forall(role, std::move(body));
  }
  const Operator& op = *connectives[below(connectives.size())];
  std::vector<Concept> kids;
  for (unsigned i = 0; i < op.arity(); ++i) kids.push_back(sample(depth - 1, roleDepth));
  return Concept::op(op, std::move(kids));
}

Problem generateProblem(const GeneratorConfig& config) {
  ConceptSampler sampler(config);
  Problem p;
  for (unsigned i = 0; i < config.axioms; ++i) {
    Concept lhs = sampler.sample(config.depth, config.roleDepth);
    Concept rhs = sampler.sample(config.depth, config.roleDepth);
    p.tbox.push_back({std::move(lhs), std::move(rhs)});
  }
  p.lhs = sampler.sample(config.depth, config.roleDepth);
  p.rhs = sampler.sample(config.depth, config.roleDepth);
  p.declaredQuantifiers = config.quantifiers;
  return p;
}

}  // namespace clonesub
