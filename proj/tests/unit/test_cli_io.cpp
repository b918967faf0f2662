#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "tfed/driver.hpp"
#include "tfed/errors.hpp"
#include "tfed/instance_io.hpp"

using namespace tfed;
using tfed::testing::Rng;

namespace {

const std::string kData = TFED_TEST_DATA_DIR;

struct CliRun {
  int status = 0;
  std::string out;
  std::string err;
  RunReport report;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.status = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos) r.report.add(line.substr(0, colon), line.substr(colon + 2));
  }
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "tfed_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(InstanceIo, ParsesTriangle) {
  const auto inst = parse_undirected_instance("p tfed 3 3 2 2 undirected\ne 0 1\ne 0 2\ne 1 2\n");
  EXPECT_EQ(inst.graph, Graph::complete(3));
  EXPECT_EQ(inst.k, 2);
  EXPECT_EQ(inst.h, 2);
}

TEST(InstanceIo, CommentsAndBlankLines) {
  const auto inst = parse_undirected_instance("c hello\n\np tfed 2 1 0 1 undirected\nc mid\ne 1 0\n");
  EXPECT_EQ(inst.graph, Graph::path(2));
}

TEST(InstanceIo, SemanticErrors) {
  EXPECT_THROW(parse_instance("p tfed 3 2 1 1 undirected\ne 0 1\ne 1 0\n"), SemanticError);
  EXPECT_THROW(parse_instance("p tfed 3 1 1 1 undirected\na 0 1\n"), SemanticError);
  EXPECT_THROW(parse_instance("p tfed 3 1 1 1 undirected\ne 0 3\n"), SemanticError);
  EXPECT_THROW(parse_instance("p tfed 3 1 1 1 undirected\ne 1 1\n"), SemanticError);
  EXPECT_THROW(parse_instance("p tfed 3 2 1 1 undirected\ne 0 1\n"), SemanticError);
}

TEST(InstanceIo, ParseErrorsCarryLineNumbers) {
  try {
    parse_instance("p tfed 3 1 1 1 undirected\ne 0 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_instance("e 0 1\n"), ParseError);
  EXPECT_THROW(parse_instance(""), ParseError);
  EXPECT_THROW(parse_instance("p tfed 3 0 1 1 sideways\n"), ParseError);
  EXPECT_THROW(parse_instance("p tfed 3 0 1 1 undirected\nq 1 2\n"), ParseError);
}

TEST(InstanceIo, RoundTripRandomInstances) {
  Rng rng(91);
  for (int iter = 0; iter < 100; ++iter) {
    const Instance inst{tfed::testing::random_graph(rng, tfed::testing::uniform(rng, 0, 12), 0.3),
                        tfed::testing::uniform(rng, 0, 9), tfed::testing::uniform(rng, 1, 9)};
    EXPECT_EQ(parse_undirected_instance(serialize_instance(inst)), inst);
    const DiInstance di{DiGraph::bidirected(inst.graph), inst.k, inst.h};
    EXPECT_EQ(parse_directed_instance(serialize_instance(di)), di);
  }
}

TEST(Driver, SolveTriangle) {
  const CliRun r = run_cli({"solve", kData + "/k3.txt"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.report.get("algorithm"), "trivial-h2");
  EXPECT_EQ(r.report.get("decision"), "yes");
  EXPECT_EQ(r.report.get("cost"), "2");
  EXPECT_EQ(r.report.get("solution_size"), "2");
}

TEST(Driver, AnalyzeCycle) {
  const CliRun r = run_cli({"analyze", kData + "/c4.txt"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.report.get("nd"), "2");
  EXPECT_EQ(r.report.get("components"), "1");
  EXPECT_EQ(r.report.get("split"), "no");
}

TEST(Driver, SolversAgreeOnCorpus) {
  for (const std::string name : {"k3", "c4", "bridged_k4", "split_small", "cluster_hub", "k33", "k5_no"}) {
    const std::string path = kData + "/" + name + ".txt";
    const CliRun oracle = run_cli({"oracle", path});
    ASSERT_EQ(oracle.status, kExitOk) << name;
    for (const std::string algo : {"auto", "nd", "oracle"}) {
      const CliRun r = run_cli({"solve", path, "--algo", algo, "--nd-max", "10"});
      EXPECT_EQ(r.report.get("decision"), oracle.report.get("decision")) << name << " " << algo;
      // Budget-capped solvers leave the cost unknown on no-instances.
      if (r.report.get("cost") != "unknown") {
        EXPECT_EQ(r.report.get("cost"), oracle.report.get("cost")) << name << " " << algo;
      } else {
        EXPECT_EQ(r.report.get("decision"), "no") << name << " " << algo;
      }
    }
    const CliRun cvd = run_cli({"solve", path, "--algo", "cvd", "--cvd-budget", "4"});
    EXPECT_EQ(cvd.report.get("decision"), oracle.report.get("decision")) << name;
  }
}

TEST(Driver, IntervalModel) {
  const std::string path = kData + "/intervals_chain.txt";
  const CliRun r = run_cli({"solve", path, "--algo", "interval", "--intervals", kData + "/intervals_chain.iv"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.report.get("algorithm"), "interval-dp");
  EXPECT_EQ(r.report.get("decision"), run_cli({"oracle", path}).report.get("decision"));
  const CliRun mismatch =
      run_cli({"solve", kData + "/k3.txt", "--algo", "interval", "--intervals", kData + "/intervals_chain.iv"});
  EXPECT_EQ(mismatch.status, kExitInputError);
  EXPECT_TRUE(mismatch.report.has("error"));
}

TEST(Driver, ArcsSubcommand) {
  const CliRun p = run_cli({"arcs", kData + "/dipath4.txt"});
  EXPECT_EQ(p.report.get("decision"), "yes");
  EXPECT_EQ(p.report.get("deleted"), "1>2");
  EXPECT_EQ(run_cli({"arcs", kData + "/outstar3.txt"}).report.get("decision"), "no");
}

TEST(Driver, GenBinpackWritesInstanceAndMetadata) {
  const auto out = scratch("bp.txt");
  const CliRun r = run_cli({"gen-binpack", "--sizes", "1,1", "--bins", "2", "--capacity", "1", "--family", "clique",
                         "-o", out.string()});
  ASSERT_EQ(r.status, kExitOk) << r.out << r.err;
  EXPECT_EQ(r.report.get("expected"), "yes");
  const auto inst = parse_undirected_instance(tfed::testing::read_text(out.string()));
  EXPECT_EQ(inst.k, 2);
  EXPECT_EQ(inst.h, 12);
  const std::string meta = tfed::testing::read_text(out.string() + ".meta");
  EXPECT_NE(meta.find("expected: yes"), std::string::npos);
  const CliRun solved = run_cli({"solve", out.string()});
  EXPECT_EQ(solved.report.get("decision"), "yes");
}

TEST(Driver, GenHittingDag) {
  const auto out = scratch("hs.txt");
  const CliRun r = run_cli({"gen-hsdag", "--universe", "3", "--sets", "0,1;1,2", "--k", "1", "-o", out.string()});
  ASSERT_EQ(r.status, kExitOk) << r.out;
  EXPECT_EQ(r.report.get("expected"), "yes");
  EXPECT_EQ(run_cli({"arcs", out.string()}).report.get("decision"), "yes");
}

TEST(Driver, ExitCodes) {
  EXPECT_EQ(run_cli({}).status, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(run_cli({"solve", kData + "/k3.txt", "--algo", "magic"}).status, kExitUsage);
  const CliRun missing = run_cli({"solve", kData + "/does-not-exist.txt"});
  EXPECT_EQ(missing.status, kExitInputError);
  EXPECT_NE(missing.out.find("error: "), std::string::npos);
  const auto bad = scratch("bad.txt");
  {
    std::ofstream f(bad);
    f << "p tfed 2 1 0 1 undirected\ne 0 0\n";
  }
  const CliRun semantic = run_cli({"solve", bad.string()});
  EXPECT_EQ(semantic.status, kExitInputError);
  EXPECT_NE(semantic.report.get("error").find("line 2"), std::string::npos);
}

TEST(Driver, ReportsAreDeterministic) {
  for (const std::string name : {"k3", "bridged_k4", "cluster_hub"}) {
    const std::string path = kData + "/" + name + ".txt";
    for (const std::string cmd : {"solve", "oracle", "approx", "analyze"}) {
      EXPECT_EQ(run_cli({cmd, path}).out, run_cli({cmd, path}).out) << cmd << " " << name;
    }
  }
}
