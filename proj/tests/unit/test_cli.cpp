#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "clonesub/solvers.hpp"
#include "clonesub/syntax.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdinText = "") {
  std::istringstream in(stdinText);
  std::ostringstream out, err;
  const int code = clonesub::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool hasLine(const std::string& text, const std::string& line) {
  std::istringstream s(text);
  for (std::string l; std::getline(s, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST(Cli, SolveReportsAndExitCodes) {
  const auto yes = run({"solve", "-"}, "axiom A <= B\nquery A <= B\n");
  EXPECT_EQ(yes.code, clonesub::cli::kSubsumed);
  EXPECT_TRUE(hasLine(yes.out, "result: subsumed")) << yes.out;
  EXPECT_TRUE(hasLine(yes.out, "label: NL-complete")) << yes.out;
  EXPECT_TRUE(hasLine(yes.out, "algorithm: implication-graph")) << yes.out;

  const auto no = run({"solve", "-", "--countermodel"}, "query A <= B\n");
  EXPECT_EQ(no.code, clonesub::cli::kNotSubsumed);
  EXPECT_TRUE(hasLine(no.out, "result: not-subsumed")) << no.out;
  EXPECT_NE(no.out.find("countermodel"), std::string::npos);
}

TEST(Cli, SolveFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "clonesub_cli_test.dl";
  std::ofstream(path) << "axiom A <= exists r . B\naxiom exists r . B <= C\nquery A <= C\n";
  const auto r = run({"solve", path.string(), "--crosscheck"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(hasLine(r.out, "algorithm: el-completion")) << r.out;
  std::filesystem::remove(path);
}

TEST(Cli, ErrorsAreDistinctAndExitTwo) {
  const auto conflict =
      run({"solve", "-", "--algorithm", "el-completion"}, "query forall r . A <= A\n");
  EXPECT_EQ(conflict.code, clonesub::cli::kError);
  EXPECT_NE(conflict.err.find("routing conflict"), std::string::npos) << conflict.err;

  const auto parse = run({"solve", "-"}, "query A <=\n");
  EXPECT_EQ(parse.code, clonesub::cli::kError);
  EXPECT_NE(parse.err.find("parse error"), std::string::npos) << parse.err;

  EXPECT_EQ(run({"solve", "/nonexistent/file"}).code, clonesub::cli::kError);
  EXPECT_EQ(run({"generate", "--clone", "XYZ"}).code, clonesub::cli::kError);
  EXPECT_EQ(run({"bogus"}).code, clonesub::cli::kError);
}

TEST(Cli, GenerateIsDeterministic) {
  const auto a = run({"generate", "--clone", "E2", "--seed", "7"});
  const auto b = run({"generate", "--clone", "E2", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"generate", "--clone", "E2", "--seed", "8"}).out);
}

TEST(Cli, GeneratedN2RoutesToImplicationGraph) {
  const auto g = run({"generate", "--clone", "N2", "--seed", "3"});
  ASSERT_EQ(g.code, 0);
  const auto r = run({"solve", "-"}, g.out);
  EXPECT_TRUE(hasLine(r.out, "algorithm: implication-graph")) << r.out;
}

TEST(Cli, GeneratedE2ExistsCrosschecks) {
  for (int seed = 1; seed <= 10; ++seed) {
    const auto g = run({"generate", "--clone", "E2", "--quantifiers", "exists", "--depth", "3",
                        "--seed", std::to_string(seed)});
    ASSERT_EQ(g.code, 0);
    const auto r = run({"solve", "-", "--crosscheck"}, g.out);
    EXPECT_LT(r.code, 2) << r.err;
    EXPECT_TRUE(hasLine(r.out, "algorithm: el-completion")) << r.out;
  }
}

TEST(Cli, ClassifyExport) {
  const auto csv = run({"classify", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("L2,both"), std::string::npos);
  const auto one = run({"classify", "--clone", "E", "--quantifiers", "exists"});
  EXPECT_NE(one.out.find("P-complete"), std::string::npos) << one.out;
}

TEST(Cli, ReduceEmitsParsableProblems) {
  const auto r = run({"reduce", "--lemma", "contraposition", "-"}, "axiom A & B <= C\nquery A <= C\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NO_THROW(clonesub::parseProblem(r.out));
  const auto g = run({"reduce", "--lemma", "gap", "-"}, "a b\nb c\nsource a\ntarget c\n");
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_TRUE(clonesub::dispatchSolve(clonesub::parseProblem(g.out)).subsumed);
}

TEST(Cli, SelftestPasses) {
  const auto r = run({"selftest", "--rounds", "2"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}
