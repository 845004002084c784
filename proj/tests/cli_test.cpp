#include "cli.hpp"

#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fixtures.hpp"
#include "hamtsp/instance_io.hpp"

namespace hamtsp::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return fixtures::data_path(file); }

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

TEST(CliSolveTest, ExactCircuitOnK6) {
  const Result r = run_cli({"solve", "--input", data("k6.txt"), "--algo", "owal-exact", "--mode", "circuit"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "weight: 12\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "lower_bound: 8\n"));
}

TEST(CliSolveTest, BrutePathJson) {
  const Result r = run_cli({"solve", "--input", data("p5a.txt"), "--algo", "brute", "--mode", "path", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "solve");
  EXPECT_EQ(j["weight"], 17);
  EXPECT_EQ(j["order"], nlohmann::json::array({3, 5, 1, 2, 4}));
}

TEST(CliSolveTest, EveryAlgorithmRuns) {
  for (const char* algo : {"nn", "mnn", "contract", "cutset", "tpv1", "tpv2", "owal-exact", "brute"}) {
    const Result r = run_cli({"solve", "--input", data("p5a.txt"), "--algo", algo, "--json"});
    ASSERT_EQ(r.code, kExitOk) << algo << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["order"].size(), 5u) << algo;
  }
  EXPECT_EQ(run_cli({"solve", "--input", data("square.txt"), "--algo", "sweep"}).code, kExitOk);
  const Result tpv = run_cli({"solve", "--input", data("p5b.txt"), "--algo", "tpv2"});
  EXPECT_TRUE(contains(tpv.out, "weight: 11\n")) << tpv.out;
  EXPECT_TRUE(contains(tpv.out, "order: 5 2 3 1 4\n")) << tpv.out;
}

TEST(CliSolveTest, InputErrors) {
  const Result sweep = run_cli({"solve", "--input", data("k6.txt"), "--algo", "sweep"});
  EXPECT_EQ(sweep.code, kExitInput);
  EXPECT_TRUE(contains(sweep.err, "NoCoordinates"));
  EXPECT_EQ(run_cli({"solve", "--input", data("k6.txt"), "--algo", "tpv1", "--mode", "circuit"}).code,
            kExitInput);
  EXPECT_EQ(run_cli({"solve", "--input", data("missing.txt"), "--algo", "nn"}).code, kExitInput);
  EXPECT_EQ(run_cli({"solve", "--input", data("k6.txt"), "--algo", "nope"}).code, kExitInput);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitInput);
}

TEST(CliSolveTest, BudgetExhaustion) {
  const Result r = run_cli({"solve", "--input", data("k6.txt"), "--algo", "owal-exact", "--budget", "3"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_TRUE(contains(r.out, "BUDGET"));
}

TEST(CliBoundTest, K6AndUnit) {
  const Result r = run_cli({"bound", "--input", data("k6.txt"), "--tour", "1,6,5,2,3,4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "lower_bound: 8\n"));
  EXPECT_TRUE(contains(r.out, "gap_bound: 6 = 0+1+1+0+3+1\n")) << r.out;
  const auto dir = std::filesystem::temp_directory_path() / "hamtsp_cli_test";
  std::filesystem::create_directories(dir);
  const std::string unit = (dir / "unit5.txt").string();
  write_instance_file(unit, fixtures::unit(5));
  const Result u = run_cli({"bound", "--input", unit, "--tour", "2,4,1,5,3", "--json"});
  const auto j = nlohmann::json::parse(u.out);
  EXPECT_EQ(j["lower_bound"], 5);
  EXPECT_EQ(j["gap_bound"], 0);
  EXPECT_EQ(run_cli({"bound", "--input", data("k6.txt"), "--tour", "1,2,3"}).code, kExitInput);
}

TEST(CliHamiltonianTest, Examples) {
  const Result yes = run_cli({"hamiltonian", "--input", data("h8.graph"), "--tree", data("h8.tree")});
  EXPECT_EQ(yes.code, kExitOk);
  EXPECT_TRUE(contains(yes.out, "YES\n"));
  EXPECT_TRUE(contains(yes.out, "chords: {j,l}\n")) << yes.out;
  EXPECT_TRUE(contains(yes.out, "edges: a b c f l e g j\n"));
  EXPECT_TRUE(contains(run_cli({"hamiltonian", "--input", data("tree7.graph")}).out, "NO\n"));
  EXPECT_TRUE(contains(run_cli({"hamiltonian", "--input", data("petersen.graph")}).out, "NO\n"));
  const Result budget = run_cli({"hamiltonian", "--input", data("petersen.graph"), "--budget", "5"});
  EXPECT_EQ(budget.code, kExitBudget);
  EXPECT_TRUE(contains(budget.out, "BUDGET"));
}

TEST(CliSearchTest, Examples) {
  const Result c = run_cli({"search", "--mode", "classical", "--bag", "2,11,7,5,3,6,9,4", "--target", "3"});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_TRUE(contains(c.out, "1 {2,11,7,5} 0\n2 {3,6} 1\n3 {3} 1\n")) << c.out;
  const Result q2 = run_cli({"search", "--mode", "q2", "--n", "4", "--target", "11"});
  EXPECT_TRUE(contains(q2.out, "amplitude: 3.5\n")) << q2.out;
  EXPECT_TRUE(contains(q2.out, "1011"));
  const Result q1 = run_cli({"search", "--mode", "q1", "--n", "1", "--target", "0", "--json"});
  const auto j = nlohmann::json::parse(q1.out);
  EXPECT_EQ(j["trace"].size(), 1u);
  const Result q3 = run_cli({"search", "--mode", "q3", "--n", "5", "--target", "17"});
  EXPECT_TRUE(contains(q3.out, "amplitude: 1\n")) << q3.out;
  EXPECT_EQ(run_cli({"search", "--mode", "classical", "--bag", "1,2", "--target", "5"}).code, kExitInput);
  EXPECT_EQ(run_cli({"search", "--mode", "q1", "--n", "3", "--target", "8"}).code, kExitInput);
}

TEST(CliGenTest, RoundTripsAndIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path() / "hamtsp_cli_test";
  std::filesystem::create_directories(dir);
  for (const char* kind : {"uniform", "euclidean"}) {
    const std::string path = (dir / (std::string(kind) + ".txt")).string();
    ASSERT_EQ(run_cli({"gen", "--seed", "7", "--p", "6", "--kind", kind, "--out", path}).code, kExitOk);
    const Result again = run_cli({"gen", "--seed", "7", "--p", "6", "--kind", kind});
    std::istringstream in(again.out);
    EXPECT_EQ(read_instance_file(path), parse_instance(in));
    EXPECT_EQ(read_instance_file(path),
              gen_random_instance(7, 6, kind[0] == 'u' ? InstanceKind::kUniform : InstanceKind::kEuclidean, 100));
  }
}

TEST(CliCompareTest, OwalMatchesBruteAndHeuristicsDominate) {
  const Result r = run_cli({"compare", "--p-min", "4", "--p-max", "7", "--seeds", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  ASSERT_EQ(line.rfind("kind,p,seed,brute_circuit,owal_circuit", 0), 0u);
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    ASSERT_GE(cells.size(), 10u);
    EXPECT_EQ(cells[3], cells[4]) << line;  // circuit weights
    EXPECT_EQ(cells[6], cells[7]) << line;  // path weights
    EXPECT_GE(std::stod(cells[9]), std::stod(cells[3])) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 2 * 4 * 5);
  EXPECT_TRUE(contains(r.out, "gap_violation_rate="));
}

TEST(CliTest, DeterministicJson) {
  auto strip = [](std::string s) {
    auto j = nlohmann::json::parse(s);
    j.erase("wall_ms");
    return j;
  };
  const std::vector<std::string> args = {"solve", "--input", data("k6.txt"), "--algo", "cutset", "--json"};
  EXPECT_EQ(strip(run_cli(args).out), strip(run_cli(args).out));
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace hamtsp::cli
