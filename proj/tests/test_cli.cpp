#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "unavoidable/cli.hpp"

using namespace unavoidable;
using namespace testing_support;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "unavoidable");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("unavoidable_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string write_graph(const std::string& name, const Graph& g) {
    std::ostringstream s;
    write_edge_list(s, g);
    return write(name, s.str());
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, ExtractThenVerifyRoundTrip) {
  const auto g = write_graph("k25.el", k2s(5));
  const CliRun ex = run({"extract", "--input", g, "--r", "4"});
  ASSERT_EQ(ex.code, 0) << ex.err;
  const auto doc = nlohmann::json::parse(ex.out);
  EXPECT_EQ(doc.at("certificate").at("kind"), "theta");
  const auto cert = write("cert.json", ex.out);
  const CliRun ok = run({"verify", "--graph", g, "--cert", cert});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(nlohmann::json::parse(ok.out).at("valid"), true);
}

TEST_F(Cli, RoundTripOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const CliRun gen = run({"gen", "--kind", "two_connected", "--n", std::to_string(5 + seed), "--seed",
                         std::to_string(seed)});
    ASSERT_EQ(gen.code, 0);
    const auto g = write("g" + std::to_string(seed) + ".el", gen.out);
    const auto rep = (dir_ / ("r" + std::to_string(seed) + ".json")).string();
    ASSERT_EQ(run({"extract", "--input", g, "--r", "3", "--output", rep}).code, 0);
    EXPECT_EQ(run({"verify", "--graph", g, "--cert", rep}).code, 0);
  }
}

TEST_F(Cli, TamperedCertificateFailsVerification) {
  const auto g = write_graph("k25.el", k2s(5));
  auto doc = nlohmann::json::parse(run({"extract", "--input", g, "--r", "4"}).out).at("certificate");
  doc["paths"][0][1] = doc["paths"][1][1];
  const CliRun bad = run({"verify", "--graph", g, "--cert", write("bad.json", doc.dump())});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(nlohmann::json::parse(bad.out).at("valid"), false);
}

TEST_F(Cli, Thresholds) {
  CliRun t = run({"thresholds", "--name", "f_bridges", "--args", "7"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out, "15\n");
  EXPECT_EQ(run({"thresholds", "--name", "f_main", "--args", "4"}).out, "unbounded\n");
  EXPECT_EQ(run({"thresholds", "--name", "f_longP", "--args", "3", "5", "--grs", "const:9"}).out, "9\n");
  EXPECT_NE(run({"thresholds", "--list"}).out.find("f_spans"), std::string::npos);
  EXPECT_EQ(run({"thresholds", "--name", "f_bridges", "--args", "2"}).code, 2);
  EXPECT_EQ(run({"thresholds", "--name", "f_bridges", "--args", "x"}).code, 2);
}

TEST_F(Cli, OracleAndGraph6Input) {
  const auto g = write("c5.g6", encode_graph6(cycle_graph(5)) + "\n");
  const CliRun o = run({"oracle", "--input", g, "--r", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc.at("clean_ladder").at("present"), true);
  EXPECT_EQ(doc.at("clique").at("present"), false);
}

TEST_F(Cli, CorpusJsonLines) {
  const CliRun c = run({"corpus", "--input", data_path("biconnected_n5.g6"), "--r", "3", "--workers", "2"});
  ASSERT_EQ(c.code, 0) << c.err;
  std::istringstream lines(c.out);
  std::string line;
  std::vector<nlohmann::json> docs;
  while (std::getline(lines, line)) docs.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(docs.size(), 11u);
  EXPECT_TRUE(docs.back().contains("summary"));
  EXPECT_EQ(docs.back().at("summary").at("graphs"), 10);
}

TEST_F(Cli, GenIsSeededAndDeterministic) {
  EXPECT_EQ(run({"gen", "--kind", "two_connected", "--n", "9"}).code, 2);
  const CliRun a = run({"gen", "--kind", "ladder", "--seed", "4", "--format", "g6"});
  const CliRun b = run({"gen", "--kind", "ladder", "--seed", "4", "--format", "g6"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const CliRun el = run({"gen", "--kind", "ladder", "--seed", "4", "--pattern", "strip"});
  EXPECT_EQ(el.code, 0);
  EXPECT_EQ(el.out.rfind("# rail_x", 0), 0u);
  EXPECT_NO_THROW((void)parse_edge_list(el.out));
  EXPECT_EQ(run({"gen", "--kind", "tree", "--seed", "1"}).code, 2);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"extract", "--r", "3"}).code, 2);
  EXPECT_EQ(run({"extract", "--input", (dir_ / "missing.el").string(), "--r", "3"}).code, 3);
  const auto junk = write("junk.el", "3 5\n0 1\n");
  EXPECT_EQ(run({"extract", "--input", junk, "--r", "3"}).code, 3);
  const auto path = write_graph("p4.el", path_graph(4));
  const CliRun np = run({"extract", "--input", path, "--r", "3"});
  EXPECT_EQ(np.code, 3);
  EXPECT_TRUE(np.out.empty());
  EXPECT_FALSE(np.err.empty());
  const auto c5 = write_graph("c5.el", cycle_graph(5));
  EXPECT_EQ(run({"extract", "--input", c5, "--r", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "--graph", c5, "--cert", write("x.json", "{not json")}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}
