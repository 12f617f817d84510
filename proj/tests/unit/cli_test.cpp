#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "flowfilter/cli.hpp"
#include "flowfilter/graph.hpp"

namespace flowfilter {
namespace {

namespace fs = std::filesystem;

const std::string kFixtures = FLOWFILTER_FIXTURE_DIR;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("flowfilter_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

  fs::path dir_;
};

TEST_F(CliTest, PlaceGreedyAllOnFig1) {
  const std::string out = path("out.json");
  Outcome r = run_cli({"place", "--input", fixture("fig1.tsv"), "--source", "s", "--algo",
                       "greedy-all", "--k", "1", "--json", out});
  ASSERT_EQ(r.status, 0) << r.err;
  auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["filters"], nlohmann::json::array({"z2"}));
  EXPECT_EQ(j["f"], 1);
  EXPECT_DOUBLE_EQ(j["fr"].get<double>(), 1.0);
  EXPECT_TRUE(fs::exists(out + ".manifest.json"));
}

TEST_F(CliTest, GenerateWritesGraphAndManifest) {
  const std::string out = path("synth.tsv");
  Outcome r = run_cli({"generate", "--levels", "10", "--width", "100", "--x", "1", "--y", "4",
                       "--seed", "7", "--out", out});
  ASSERT_EQ(r.status, 0) << r.err;
  CGraph g = parse_edge_list(slurp(out), "s");
  EXPECT_TRUE(is_acyclic(g));
  EXPECT_GT(g.edge_count(), 20000u);
  auto m = nlohmann::json::parse(slurp(out + ".manifest.json"));
  EXPECT_EQ(m["command"], "generate");
  EXPECT_EQ(m["input"]["generator"]["seed"], 7);
  EXPECT_EQ(m["input"]["generator"]["levels"], 10);
  EXPECT_EQ(m["outputs"][0]["path"], out);
}

TEST_F(CliTest, FrCurveFig2Contrast) {
  const std::string csv = path("curve.csv");
  Outcome r = run_cli({"fr-curve", "--input", fixture("fig2.tsv"), "--source", "s", "--algos",
                       "greedy-1,greedy-all", "--kmax", "1", "--csv", csv, "--no-timing"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(slurp(csv),
            "algorithm,k,fr,runs,wall_ms\n"
            "greedy-1,1,0.000000,1,0.000\n"
            "greedy-all,1,1.000000,1,0.000\n");
}

TEST_F(CliTest, FrCurveToStdout) {
  Outcome r = run_cli({"fr-curve", "--input", fixture("fig1.tsv"), "--algos", "greedy-all",
                       "--kmax", "2", "--no-timing"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out,
            "algorithm,k,fr,runs,wall_ms\n"
            "greedy-all,1,1.000000,1,0.000\n"
            "greedy-all,2,1.000000,1,0.000\n");
}

TEST_F(CliTest, ReplayReproducesBytes) {
  const std::string json = path("rand.json");
  Outcome r = run_cli({"place", "--input", fixture("fig1.tsv"), "--source", "s", "--algo",
                       "rand-i", "--k", "3", "--seed", "42", "--json", json});
  ASSERT_EQ(r.status, 0) << r.err;
  const std::string first = slurp(json);
  fs::remove(json);
  Outcome replay = run_cli({"replay", json + ".manifest.json"});
  EXPECT_EQ(replay.status, 0) << replay.err;
  EXPECT_NE(replay.out.find("identical"), std::string::npos);
  EXPECT_EQ(slurp(json), first);
}

TEST_F(CliTest, ReplayDetectsChangedOutput) {
  const std::string out = path("g.tsv");
  ASSERT_EQ(run_cli({"generate", "--kind", "dag", "--nodes", "20", "--p", "0.2", "--seed", "3",
                     "--out", out})
                .status,
            0);
  auto manifest = nlohmann::json::parse(slurp(out + ".manifest.json"));
  manifest["outputs"][0]["fnv1a64"] = "0000000000000000";
  std::ofstream(path("tampered.json")) << manifest.dump();
  Outcome replay = run_cli({"replay", path("tampered.json")});
  EXPECT_EQ(replay.status, 1);
  EXPECT_NE(replay.out.find("MISMATCH"), std::string::npos);
}

TEST_F(CliTest, TimedCurveIsNotClaimedReproducible) {
  const std::string csv = path("timed.csv");
  ASSERT_EQ(run_cli({"fr-curve", "--input", fixture("fig1.tsv"), "--algos", "greedy-1",
                     "--kmax", "1", "--csv", csv})
                .status,
            0);
  Outcome replay = run_cli({"replay", csv + ".manifest.json"});
  EXPECT_EQ(replay.status, 0);
  EXPECT_NE(replay.out.find("skipped"), std::string::npos);
}

TEST_F(CliTest, CyclicInputGetsExtractHint) {
  Outcome r = run_cli({"place", "--input", fixture("cyclic.tsv"), "--source", "s", "--algo",
                       "greedy-all", "--k", "1"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("CycleDetected"), std::string::npos);
  EXPECT_NE(r.err.find("extract-dag"), std::string::npos);
}

TEST_F(CliTest, ExtractDagThenPlace) {
  const std::string dag = path("dag.tsv");
  Outcome r = run_cli({"extract-dag", "--input", fixture("cyclic.tsv"), "--root", "s", "--out", dag});
  ASSERT_EQ(r.status, 0) << r.err;
  CGraph g = parse_edge_list(slurp(dag), "s");
  EXPECT_TRUE(is_acyclic(g));
  EXPECT_EQ(g.edge_count(), 4u);  // only c -> a closes the cycle
  EXPECT_FALSE(g.has_edge(g.index_of("c"), g.index_of("a")));
  EXPECT_EQ(run_cli({"place", "--input", dag, "--algo", "greedy-1", "--k", "1"}).status, 0);
}

TEST_F(CliTest, ExtractDagBestRoot) {
  Outcome r = run_cli({"extract-dag", "--input", fixture("cyclic.tsv"), "--best-root", "--jobs",
                       "2", "--out", "-"});
  ASSERT_EQ(r.status, 0) << r.err;
  CGraph g = parse_edge_list(r.out);
  EXPECT_EQ(g.node_count(), 5u);
  EXPECT_EQ(g.label(g.single_source()), "s");
}

TEST_F(CliTest, ExtractDagNeedsARoot) {
  Outcome r = run_cli({"extract-dag", "--input", fixture("cyclic.tsv"), "--out", "-"});
  EXPECT_EQ(r.status, 2);
  Outcome both = run_cli({"extract-dag", "--input", fixture("cyclic.tsv"), "--root", "s",
                          "--best-root", "--out", "-"});
  EXPECT_EQ(both.status, 2);
  Outcome unknown = run_cli({"extract-dag", "--input", fixture("cyclic.tsv"), "--root", "nope",
                             "--out", "-"});
  EXPECT_EQ(unknown.status, 1);
  EXPECT_NE(unknown.err.find("RootNotFound"), std::string::npos);
}

TEST_F(CliTest, EvaluateFig2) {
  Outcome r = run_cli({"evaluate", "--input", fixture("fig2.tsv"), "--source", "s", "--filters", "A"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("phi_empty\t14\n"), std::string::npos);
  EXPECT_NE(r.out.find("phi\t12\n"), std::string::npos);
  EXPECT_NE(r.out.find("F\t2\n"), std::string::npos);
}

TEST_F(CliTest, EvaluateRejectsSourceAndUnknownLabels) {
  EXPECT_EQ(run_cli({"evaluate", "--input", fixture("fig2.tsv"), "--filters", "s"}).status, 1);
  Outcome r = run_cli({"evaluate", "--input", fixture("fig2.tsv"), "--filters", "zz"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("UnknownNode"), std::string::npos);
}

TEST_F(CliTest, OracleFig1) {
  const std::string json = path("oracle.json");
  Outcome r = run_cli({"oracle", "--input", fixture("fig1.tsv"), "--k", "1", "--json", json});
  ASSERT_EQ(r.status, 0) << r.err;
  auto j = nlohmann::json::parse(slurp(json));
  EXPECT_EQ(j["filters"], nlohmann::json::array({"z2"}));
  EXPECT_EQ(j["f"], 1);
  Outcome tight = run_cli({"oracle", "--input", fixture("fig1.tsv"), "--k", "3", "--budget", "5"});
  EXPECT_EQ(tight.status, 1);
  EXPECT_NE(tight.err.find("BudgetExceeded"), std::string::npos);
}

TEST_F(CliTest, TreeDpOnlyOnCTrees) {
  Outcome ok = run_cli({"place", "--input", fixture("tree1.tsv"), "--algo", "tree-dp", "--k", "1"});
  ASSERT_EQ(ok.status, 0) << ok.err;
  EXPECT_NE(ok.out.find("filters\ta\n"), std::string::npos);
  Outcome bad = run_cli({"place", "--input", fixture("fig1.tsv"), "--algo", "tree-dp", "--k", "1"});
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.err.find("NotACTree"), std::string::npos);
}

TEST_F(CliTest, Validate) {
  Outcome dag = run_cli({"validate", "--input", fixture("fig1.tsv")});
  ASSERT_EQ(dag.status, 0);
  EXPECT_NE(dag.out.find("acyclic\tyes"), std::string::npos);
  EXPECT_NE(dag.out.find("F_max\t1\n"), std::string::npos);
  Outcome cyc = run_cli({"validate", "--input", fixture("cyclic.tsv")});
  ASSERT_EQ(cyc.status, 0);
  EXPECT_NE(cyc.out.find("acyclic\tno"), std::string::npos);
  EXPECT_EQ(run_cli({"validate", "--input", fixture("cyclic.tsv"), "--require-dag"}).status, 1);
}

TEST_F(CliTest, MultipleRootsGetSuperSource) {
  const std::string in = path("roots.tsv");
  std::ofstream(in) << "r1\ta\nr2\ta\na\tb\n";
  Outcome r = run_cli({"evaluate", "--input", in, "--filters", "a"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.err.find("super-source"), std::string::npos);
  EXPECT_NE(r.out.find("F\t1\n"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).status, 2);
  EXPECT_EQ(run_cli({"bogus"}).status, 2);
  EXPECT_EQ(run_cli({"place", "--input", fixture("fig1.tsv"), "--algo", "magic"}).status, 2);
  EXPECT_EQ(run_cli({"place", "--algo", "greedy-1"}).status, 2);
  EXPECT_EQ(run_cli({"fr-curve", "--input", fixture("fig1.tsv"), "--kmax", "0"}).status, 2);
  EXPECT_EQ(run_cli({"--help"}).status, 0);
}

TEST_F(CliTest, DataErrors) {
  EXPECT_EQ(run_cli({"validate", "--input", path("missing.tsv")}).status, 1);
  const std::string bad = path("bad.tsv");
  std::ofstream(bad) << "a b\n";
  Outcome r = run_cli({"validate", "--input", bad});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
}

}  // namespace
}  // namespace flowfilter
