#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "psdrank/exact/matrix_io.hpp"
#include "psdrank/io/json.hpp"
#include "psdrank/psd/order3.hpp"

namespace psdrank {
namespace {

using json_io::json;

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun shell(const std::string& cmd) {
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

CliRun run(const std::string& args) { return shell(std::string(PSDRANK_CLI) + " " + args); }

// Runs `first | psdrank second`.
CliRun pipe_run(const std::string& first, const std::string& second) {
  return shell(first + " | " + PSDRANK_CLI + " " + second);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("psdrank_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const auto p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  std::filesystem::path dir_;
};

const std::string kCli = PSDRANK_CLI;

TEST_F(CliTest, RankOfS6) {
  const CliRun r = pipe_run(kCli + " gen sn 6", "rank");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "3\n");
}

TEST_F(CliTest, Order3CertificateJson) {
  const CliRun r = pipe_run(kCli + " gen sn 6", "order3-exclude --json --no-sign-fix");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("min_rank"), 4);
  EXPECT_EQ(j.at("assignments_checked"), 512);
  EXPECT_EQ(j.at("rows"), json({3, 4, 5, 6}));
  EXPECT_EQ(j.at("cols"), json({1, 2, 3, 4}));
}

TEST_F(CliTest, Order3OnLargerSnViaLeadingBlock) {
  const CliRun r = pipe_run(kCli + " gen sn 9", "--json order3-exclude --rows 1-6 --cols 1-6");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out).at("conclusive"), true);
}

TEST_F(CliTest, BooleanRankOfAllOnes) {
  const std::string f = write("ones.txt", "2 3\n1 1 1\n1 1 1\n");
  const CliRun r = run("boolrank " + f);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1\n");
}

TEST_F(CliTest, GeneratedMatricesParseBack) {
  for (std::size_t n : {1, 4, 7}) {
    const CliRun text = run("gen sn " + std::to_string(n));
    ASSERT_EQ(text.status, 0);
    EXPECT_EQ(parse_matrix(text.out), generate_sn(n));
    const CliRun js = run("--json gen sn " + std::to_string(n));
    EXPECT_EQ(json_io::matrix_from_json(json::parse(js.out)), generate_sn(n));
  }
  const CliRun cut = run("gen cutpoly 5");
  ASSERT_EQ(cut.status, 0);
  const ExactMatrix s = parse_matrix(cut.out);
  EXPECT_EQ(s.rows(), 26U);
  EXPECT_EQ(s.cols(), 16U);
}

TEST_F(CliTest, PipelineRoundTrip) {
  const std::string s6 = write("s6.txt", format_matrix(oracle::displayed_s6()));
  const std::string emb = (dir_ / "e.json").string();
  const std::string fac = (dir_ / "f.json").string();
  ASSERT_EQ(run("embed from-rank " + s6 + " > " + emb).status, 0);
  EXPECT_EQ(run("verify embedding " + emb + " --matrix " + s6).status, 0);
  ASSERT_EQ(run("psd from-embedding " + emb + " > " + fac).status, 0);
  EXPECT_EQ(run("verify psd " + fac).status, 0);
  EXPECT_EQ(pipe_run(kCli + " embed from-psd " + fac, "verify embedding --matrix " + s6).status, 0);

  const std::string wrong = write("wrong.txt", "6 6\n" + std::string(36, ' ') + "1 1 1 1 1 1\n1 1 1 1 1 1\n"
                                               "1 1 1 1 1 1\n1 1 1 1 1 1\n1 1 1 1 1 1\n1 1 1 1 1 1\n");
  EXPECT_EQ(run("verify psd " + fac + " --matrix " + wrong).status, 1);
  EXPECT_EQ(run("verify embedding " + emb + " --matrix " + wrong).status, 1);

  const CliRun a = run("realize-support " + fac + " --seed 5");
  const CliRun b = run("realize-support " + fac + " --seed 5");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(support(parse_matrix(a.out)), support(oracle::displayed_s6()));

  const CliRun red = run("--json reduce-rank " + fac);
  ASSERT_EQ(red.status, 0);
  for (const auto& k : json::parse(red.out).at("b_ranks")) EXPECT_LE(k.get<int>(), 3);
}

TEST_F(CliTest, BoundsAreConsistent) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 12; ++trial) {
    const ExactMatrix s = oracle::random_rational_matrix(rng, 5);
    const std::string f = write("m" + std::to_string(trial) + ".txt", format_matrix(s));
    const CliRun r = run("--json bounds " + f);
    ASSERT_EQ(r.status, 0) << r.out;
    const json j = json::parse(r.out);
    const int rk = j.at("rank").at("value");
    const int tri = j.at("triangular_rank").at("value");
    EXPECT_LE(tri, rk);
    EXPECT_LE(j.at("embrkl").at("lower").get<int>(), j.at("embrkl").at("upper").get<int>());
    EXPECT_LE(j.at("boolean_rank").at("lower").get<int>(), j.at("boolean_rank").at("upper").get<int>());
    EXPECT_GE(j.at("psd_rank_lower").at("value").get<int>(), tri);
  }
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run("appendix-check 18").status, 0);
  EXPECT_EQ(run("appendix-check 10 2>/dev/null").status, 2);
  EXPECT_EQ(run("no-such-command 2>/dev/null").status, 2);
  EXPECT_EQ(run("rank /nonexistent/file 2>/dev/null").status, 2);
  const std::string bad = write("bad.txt", "2 2\n1 2\n3\n");
  EXPECT_EQ(run("rank " + bad + " 2>/dev/null").status, 2);

  std::string ci = "10 10\n";
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) ci += i == j ? "0 " : "1 ";
    ci += "\n";
  }
  const CliRun budget = run("boolrank --budget 3 " + write("ci.txt", ci));
  EXPECT_EQ(budget.status, 3);
  EXPECT_NE(budget.out.find("unknown, bounds"), std::string::npos);

  const std::string s6 = write("s6.txt", format_matrix(oracle::displayed_s6()));
  EXPECT_EQ(run("sqrt-bound " + s6 + " --rows 1-6 --cols 1-6 --cap 10 2>/dev/null").status, 3);
}

TEST_F(CliTest, FeasibleCoverOfDisjointnessGraphs) {
  const std::string h = (dir_ / "h.g").string();
  const std::string hb = (dir_ / "hb.g").string();
  ASSERT_EQ(run("gen disjointness 5 1 > " + h).status, 0);
  ASSERT_EQ(run("gen disjointness 5 1 --forbidden > " + hb).status, 0);
  const CliRun r = run("feasible-cover " + h + " " + hb);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "4\n");
}

}  // namespace
}  // namespace psdrank
