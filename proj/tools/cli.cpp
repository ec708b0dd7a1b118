#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "clonesub/classify.hpp"
#include "clonesub/error.hpp"
#include "clonesub/generator.hpp"
#include "clonesub/reductions.hpp"
#include "clonesub/semantics.hpp"
#include "clonesub/solvers.hpp"
#include "clonesub/syntax.hpp"

namespace clonesub::cli {

namespace {

struct RunConfig {
  std::string input = "-";
  std::string algorithm = "auto";
  bool crosscheck = false;
  std::size_t maxDomain = 3;
  std::uint64_t seed = 1;
  std::string format = "text";
  bool countermodel = false;

  // classify
  std::string clone;
  std::string quantifiers = "none";
  // reduce
  std::string lemma;
  std::string base;
  // generate
  unsigned atoms = 4;
  unsigned axioms = 4;
  unsigned depth = 2;
  unsigned roleDepth = 2;
  // selftest
  unsigned rounds = 40;
};

std::string readInput(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Error("cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

CloneId requireClone(const std::string& name) {
  const auto c = cloneFromName(name);
  if (!c) throw Error("unknown clone " + name);
  return *c;
}

QuantifierSet requireQuantifiers(const std::string& name) {
  const auto q = quantifierSetFromString(name);
  if (!q) throw Error("unknown quantifier set " + name + " (none|exists|forall|both)");
  return *q;
}

// Comma-separated operators: built-in names, name=table, or clone:NAME for
// the canonical base of a clone.
std::vector<Operator> parseBase(const std::string& list) {
  std::vector<Operator> ops;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    if (item.rfind("clone:", 0) == 0) {
      for (const auto& nf : canonicalBase(requireClone(item.substr(6)))) {
        ops.push_back({nf.name, nf.fun});
      }
    } else if (const auto eq = item.find('='); eq != std::string::npos) {
      ops.push_back({item.substr(0, eq), BoolFun::fromString(item.substr(eq + 1))});
    } else if (const Operator* b = findBuiltin(item)) {
      ops.push_back(*b);
    } else {
      throw Error("unknown operator " + item + " in --base");
    }
  }
  if (ops.empty()) throw Error("--base lists no operators");
  return ops;
}

PropFormula toFormula(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::Atom: return PropFormula::var(c.name());
    case Concept::Kind::NegAtom: return PropFormula::apply(ops::neg(), {PropFormula::var(c.name())});
    case Concept::Kind::Exists:
    case Concept::Kind::Forall: throw FragmentError("imp-to-subs needs quantifier-free formulas");
    case Concept::Kind::Op: break;
  }
  std::vector<PropFormula> args;
  for (const auto& ch : c.children()) args.push_back(toFormula(ch));
  return PropFormula::apply(c.op(), std::move(args));
}

int answer(std::ostream& out, bool subsumed) {
  out << "result: " << (subsumed ? "subsumed" : "not-subsumed") << '\n';
  return subsumed ? kSubsumed : kNotSubsumed;
}

int cmdSolve(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Problem p = parseProblem(readInput(cfg.input, in));
  DispatchOptions opts;
  const auto algo = algorithmFromName(cfg.algorithm);
  if (!algo) throw Error("unknown algorithm " + cfg.algorithm);
  opts.algorithm = *algo;
  opts.crosscheck = cfg.crosscheck;
  opts.wantCountermodel = cfg.countermodel;
  opts.maxDomain = cfg.maxDomain;
  const auto r = dispatchSolve(p, opts);

  const int code = answer(out, r.subsumed);
  out << "clone: " << cloneName(r.clone) << '\n';
  out << "quantifiers: " << r.quantifiers.toString() << '\n';
  out << "algorithm: " << algorithmName(r.algorithm) << '\n';
  out << "label: " << r.label.toString() << '\n';
  out << "cite: " << r.label.cite << '\n';
  if (cfg.crosscheck) out << "crosscheck: agree\n";
  if (cfg.countermodel && !r.subsumed) {
    if (r.countermodel) {
      std::istringstream lines(r.countermodel->toString());
      for (std::string line; std::getline(lines, line);) out << "countermodel: " << line << '\n';
    } else {
      out << "countermodel: " << r.countermodelNote << '\n';
    }
  }
  return code;
}

int cmdClassify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto format = cfg.format == "csv" ? TableFormat::Csv : TableFormat::Text;
  if (cfg.format != "csv" && cfg.format != "text") throw Error("unknown format " + cfg.format);
  if (!cfg.clone.empty()) {
    const auto label = complexityLabel(requireClone(cfg.clone), requireQuantifiers(cfg.quantifiers));
    out << "clone: " << cfg.clone << "\nquantifiers: " << cfg.quantifiers
        << "\nlabel: " << label.toString() << "\ncite: " << label.cite << '\n';
    return 0;
  }
  if (cfg.input != "-" || !cfg.base.empty()) {
    std::vector<BoolFun> fs;
    QuantifierSet q = requireQuantifiers(cfg.quantifiers);
    if (!cfg.base.empty()) {
      for (const auto& op : parseBase(cfg.base)) fs.push_back(op.fun);
    } else {
      const auto sig = parseProblem(readInput(cfg.input, in)).signature();
      fs = sig.functions();
      q = sig.quantifiers;
    }
    const auto label = complexityLabel(fs, q);
    out << "clone: " << cloneName(identifyClone(fs)) << "\nquantifiers: " << q.toString()
        << "\nlabel: " << label.toString() << "\ncite: " << label.cite << '\n';
    return 0;
  }
  out << classificationTable(format);
  return 0;
}

int cmdReduce(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const std::string text = readInput(cfg.input, in);
  const std::string& lemma = cfg.lemma;
  if (lemma == "gap") {
    out << toString(gapToSubs(parseDirectedGraph(text)));
    return 0;
  }
  if (lemma == "hgap") {
    out << toString(hgapToSubs(parseHypergraph(text)));
    return 0;
  }
  const Problem p = parseProblem(text);
  Problem result;
  if (lemma == "base-change") {
    if (cfg.base.empty()) throw Error("base-change needs --base");
    result = baseChange(p, parseBase(cfg.base));
  } else if (lemma == "contraposition") {
    result = dualizeInstance(p);
  } else if (lemma == "constants-neg" || lemma == "constants-lattice") {
    const auto mode =
        lemma == "constants-neg" ? ConstantMode::ViaNegation : ConstantMode::ViaLatticeOps;
    if (cfg.base.empty()) {
      result = simulateConstants(p, mode);
    } else {
      std::vector<BoolFun> fs;
      for (const auto& op : parseBase(cfg.base)) fs.push_back(op.fun);
      result = simulateConstants(p, mode, fs);
    }
  } else if (lemma == "imp-to-subs") {
    if (!p.tbox.empty()) throw Error("imp-to-subs reads the query phi <= psi with an empty TBox");
    result = impToSubs(toFormula(p.lhs), toFormula(p.rhs));
  } else if (lemma == "subs-to-cotcsat") {
    const auto inst = subsToCoTcsat(p);
    result.tbox = inst.tbox;
    result.lhs = inst.target;
    result.rhs = Concept::bottom();
  } else if (lemma == "cotcsat-to-subs") {
    result = coTcsatToSubs({p.tbox, p.lhs});
  } else {
    throw Error("unknown lemma " + lemma);
  }
  out << toString(result);
  return 0;
}

int cmdOracle(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Problem p = parseProblem(readInput(cfg.input, in));
  const bool quantifierFree = p.signature().quantifiers.empty();
  std::optional<bool> prop;
  if (quantifierFree) {
    prop = propEntails(p);
    out << "prop-entails: " << (*prop ? "subsumed" : "not-subsumed") << '\n';
  }
  TypeEliminationStats stats;
  const bool general = !tcsatTypeElim(p.tbox, Concept::conj(p.lhs, nnfNeg(p.rhs)), {}, &stats);
  out << "type-elimination: " << (general ? "subsumed" : "not-subsumed") << '\n';
  out << "types: " << stats.candidateTypes << " candidates, " << stats.survivingTypes
      << " surviving after " << stats.rounds << " rounds\n";
  const auto cm = boundedRefute(p, cfg.maxDomain);
  out << "bounded-refute: "
      << (cm ? "countermodel with " + std::to_string(cm->domainSize()) + " elements"
             : "none up to " + std::to_string(cfg.maxDomain))
      << '\n';
  if (cm && cfg.countermodel) {
    std::istringstream lines(cm->toString());
    for (std::string line; std::getline(lines, line);) out << "countermodel: " << line << '\n';
  }
  if ((prop && *prop != general) || (cm && general)) {
    throw CrosscheckFailure("reference deciders disagree");
  }
  return answer(out, general);
}

int cmdGenerate(const RunConfig& cfg, std::ostream& out) {
  GeneratorConfig g;
  g.clone = requireClone(cfg.clone.empty() ? "BF" : cfg.clone);
  g.quantifiers = requireQuantifiers(cfg.quantifiers);
  g.atoms = cfg.atoms;
  g.axioms = cfg.axioms;
  g.depth = cfg.depth;
  g.roleDepth = cfg.roleDepth;
  g.seed = cfg.seed;
  out << toString(generateProblem(g));
  return 0;
}

// Random instances from every inventory clone and quantifier set, each solved
// by the routed algorithm and cross-checked against the reference decider.
int cmdSelftest(const RunConfig& cfg, std::ostream& out) {
  std::size_t total = 0, failures = 0;
  for (CloneId c : cloneInventory()) {
    for (const auto& q : allQuantifierSets()) {
      for (unsigned i = 0; i < cfg.rounds; ++i) {
        GeneratorConfig g;
        g.clone = c;
        g.quantifiers = q;
        g.atoms = 3;
        g.axioms = 3;
        g.depth = 2;
        g.seed = cfg.seed * 1'000'003 + total;
        const Problem p = generateProblem(g);
        ++total;
        try {
          DispatchOptions opts;
          opts.crosscheck = true;
          dispatchSolve(p, opts);
        } catch (const Error& e) {
          ++failures;
          out << "failure: " << cloneName(c) << '/' << q.toString() << ": " << e.what() << '\n';
        }
      }
    }
  }
  out << "selftest: " << total - failures << '/' << total << " instances agree\n";
  return failures == 0 ? 0 : kError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Subsumption over Boolean operator fragments", "clonesub"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Decide a problem file");
  solve->add_option("input", cfg.input, "Problem file ('-' for stdin)");
  solve->add_option("--algorithm", cfg.algorithm,
                    "auto, implication-graph, conj-closure, dual-conj-closure, truth-table, "
                    "el-completion, dual-el or type-elimination");
  solve->add_flag("--crosscheck", cfg.crosscheck, "Also run type elimination and compare");
  solve->add_option("--max-domain", cfg.maxDomain, "Domain bound of the countermodel search")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--countermodel", cfg.countermodel, "Print a countermodel when not subsumed");

  auto* classify = app.add_subcommand("classify", "Complexity labels");
  classify->add_option("input", cfg.input, "Problem file whose fragment is classified");
  classify->add_option("--clone", cfg.clone, "Classify an inventory clone");
  classify->add_option("--base", cfg.base, "Classify an operator set (comma separated)");
  classify->add_option("--quantifiers", cfg.quantifiers, "none|exists|forall|both");
  classify->add_option("--format", cfg.format, "text or csv for the full table");

  auto* reduce = app.add_subcommand("reduce", "Apply a reduction and print the image");
  reduce->add_option("--lemma", cfg.lemma,
                     "base-change, contraposition, constants-neg, constants-lattice, "
                     "imp-to-subs, subs-to-cotcsat, cotcsat-to-subs, gap, hgap")
      ->required();
  reduce->add_option("input", cfg.input, "Problem, graph or hypergraph file");
  reduce->add_option("--base", cfg.base, "Target base (base-change) or base to check (constants-*)");

  auto* oracle = app.add_subcommand("oracle", "Run the reference deciders");
  oracle->add_option("input", cfg.input, "Problem file");
  oracle->add_option("--max-domain", cfg.maxDomain, "Domain bound of the countermodel search")
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--countermodel", cfg.countermodel, "Print the countermodel found");

  auto* generate = app.add_subcommand("generate", "Emit a random in-fragment problem");
  generate->add_option("--clone", cfg.clone, "Clone name")->required();
  generate->add_option("--quantifiers", cfg.quantifiers, "none|exists|forall|both");
  generate->add_option("--atoms", cfg.atoms)->check(CLI::PositiveNumber);
  generate->add_option("--axioms", cfg.axioms);
  generate->add_option("--depth", cfg.depth);
  generate->add_option("--role-depth", cfg.roleDepth);
  generate->add_option("--seed", cfg.seed);

  auto* selftest = app.add_subcommand("selftest", "Cross-check random instances");
  selftest->add_option("--seed", cfg.seed);
  selftest->add_option("--rounds", cfg.rounds, "Instances per clone and quantifier set");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kError;
  }

  try {
    if (solve->parsed()) return cmdSolve(cfg, in, out);
    if (classify->parsed()) return cmdClassify(cfg, in, out);
    if (reduce->parsed()) return cmdReduce(cfg, in, out);
    if (oracle->parsed()) return cmdOracle(cfg, in, out);
    if (generate->parsed()) return cmdGenerate(cfg, out);
    if (selftest->parsed()) return cmdSelftest(cfg, out);
  } catch (const ParseError& e) {
    err << "error: parse error";
    if (e.line() != 0) err << " at line " << e.line() << ", column " << e.column();
    err << ": " << e.what() << '\n';
  } catch (const RoutingConflict& e) {
    err << "error: routing conflict: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "error: resource limit: " << e.what() << '\n';
  } catch (const FragmentError& e) {
    err << "error: fragment violation: " << e.what() << '\n';
  } catch (const NotExpressibleError& e) {
    err << "error: not expressible: " << e.what() << '\n';
  } catch (const CrosscheckFailure& e) {
    err << "error: crosscheck failure: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

}  // namespace clonesub::cli
