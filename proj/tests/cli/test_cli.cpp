#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace hhcheck {
namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

CliResult run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"hhcheck"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("hhcheck-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Verify, EqualityAnchor) {
  const CliResult r = run({"verify", "thm-2.2", "--fn", "pow:0.5", "--a", "1", "--b", "4", "--alpha", "0.5", "--m", "1"});
  ASSERT_EQ(r.code, kHolds) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["statement_id"], "thm-2.2");
  EXPECT_TRUE(j["holds"].get<bool>());
  EXPECT_LE(std::fabs(j["margin"].get<double>()), 1e-9);
  EXPECT_EQ(j["status"], "holds");
  EXPECT_EQ(j["inputs"]["function"], "pow:0.5");
}

TEST(Verify, Lemma) {
  const CliResult r = run({"verify", "lemma-1-1", "--fn", "pow:1", "--a", "1", "--b", "2"});
  ASSERT_EQ(r.code, kHolds);
  EXPECT_LE(r.json()["terms"]["residual"].get<double>(), 1e-9);
}

TEST(Verify, UsageErrors) {
  EXPECT_EQ(run({"verify", "thm-2.5", "--fn", "pow:1", "--a", "1", "--b", "2", "--q", "0.5"}).code, kUsage);
  EXPECT_EQ(run({"verify", "thm-8"}).code, kUsage);
  EXPECT_EQ(run({"verify", "thm-2.2", "--fn", "nope"}).code, kUsage);
  EXPECT_EQ(run({"verify", "thm-2.2", "--a", "3", "--b", "2"}).code, kUsage);
  EXPECT_EQ(run({"verify", "thm-2.2", "--a", "x"}).code, kUsage);
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"--format", "csv", "verify", "thm-2.2"}).code, kUsage);
  EXPECT_FALSE(run({"verify", "thm-8"}).err.empty());
}

TEST(Verify, ViolationExitsOne) {
  const CliResult r = run({"--thm24-factor", "printed", "verify", "thm-2.4", "--fn", "identity", "--a", "2", "--b", "4",
                     "--q", "2"});
  EXPECT_EQ(r.code, kViolated);
  EXPECT_EQ(r.json()["status"], "violated");
}

TEST(Verify, GlobalFlagsAfterSubcommand) {
  const CliResult r = run({"verify", "eq-1-4", "--fn", "neg-identity", "--tolerance", "10"});
  EXPECT_EQ(r.code, kHolds);
  EXPECT_EQ(r.json()["tolerance"], 10.0);
}

TEST(Verify, HypothesisFailureIsNotAViolation) {
  const CliResult r = run({"--check-hypothesis", "verify", "thm-2.2", "--fn", "neg-identity", "--a", "1", "--b", "2"});
  EXPECT_EQ(r.code, kHolds);
  const auto j = r.json();
  EXPECT_EQ(j["status"], "hypothesis-failed");
  EXPECT_FALSE(j["hypothesis"]["holds"].get<bool>());
  EXPECT_FALSE(j["hypothesis"]["counterexample"].is_null());
}

TEST(Verify, Propositions) {
  EXPECT_EQ(run({"verify", "prop-3.2", "--a", "1", "--b", "2", "--alpha", "0.5", "--q", "1"}).code, kHolds);
  EXPECT_EQ(run({"verify", "prop-3.3", "--a", "1", "--b", "2", "--alpha", "0.5", "--q", "2"}).code, kHolds);
  const CliResult p4 = run({"verify", "prop-3.4", "--a", "1", "--b", "2", "--alpha", "0.5", "--q", "2"});
  EXPECT_EQ(p4.code, kHolds);
  EXPECT_EQ(p4.json()["inputs"]["p"], 2.0);
  EXPECT_EQ(run({"verify", "prop-3.4", "--a", "1", "--b", "2", "--alpha", "0.5", "--q", "2", "--p", "3"}).code, kUsage);
  EXPECT_EQ(run({"verify", "prop-3.1", "--a", "1", "--b", "2", "--alpha", "0.5"}).code, kViolated);
}

TEST(Coeff, LambdaWithOracle) {
  const CliResult r = run({"coeff", "lambda", "--alpha", "0", "--q", "1", "--a", "1", "--b", "2", "--oracle"});
  ASSERT_EQ(r.code, kHolds) << r.err;
  const auto j = r.json();
  const auto& v = j["values"][0];
  EXPECT_NEAR(v["value"].get<double>(), 0.2644339287, 1e-10);
  EXPECT_NEAR(v["oracle"].get<double>(), 0.2644339287, 1e-10);
  EXPECT_LE(v["relative_difference"].get<double>(), 1e-8);
  EXPECT_EQ(v["provenance"], "closed-form");
  EXPECT_TRUE(j["oracle_agreement"].get<bool>());
}

TEST(Coeff, MuAtAlphaZero) {
  const CliResult r = run({"coeff", "mu", "--alpha", "0", "--q", "2", "--a", "1", "--b", "3"});
  ASSERT_EQ(r.code, kHolds);
  EXPECT_EQ(r.json()["values"][0]["value"], 0.0);
  EXPECT_FALSE(r.json().contains("oracle_agreement"));
}

TEST(Coeff, Families) {
  const CliResult l = run({"coeff", "lambda123", "--a", "1", "--b", "2", "--oracle"});
  ASSERT_EQ(l.code, kHolds);
  EXPECT_EQ(l.json()["values"].size(), 3u);
  EXPECT_TRUE(l.json()["cross_checks"].contains("lambda3_direct"));
  const CliResult m = run({"coeff", "mu12", "--q", "2", "--a", "1", "--b", "2", "--oracle"});
  ASSERT_EQ(m.code, kHolds);
  EXPECT_NEAR(m.json()["values"][0]["value"].get<double>(), 1.0 / 12.0, 1e-15);
  EXPECT_EQ(run({"coeff", "mu12", "--q", "1", "--a", "1", "--b", "2"}).code, kUsage);
  EXPECT_EQ(run({"coeff", "kappa"}).code, kUsage);
  EXPECT_EQ(run({"coeff", "nu", "--a", "2", "--b", "1"}).code, kUsage);
}

TEST(Means, Table) {
  const CliResult r = run({"means", "--a", "1", "--b", "2", "--alpha", "0.5", "--q", "2", "--p", "2"});
  const auto j = r.json();
  EXPECT_NEAR(j["means"]["H"].get<double>(), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(j["means"]["G"].get<double>(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(j["means"]["A"].get<double>(), 1.5, 1e-15);
  ASSERT_EQ(j["propositions"].size(), 4u);
  EXPECT_FALSE(j["propositions"][0]["holds"].get<bool>());  // prop-3.1 at (1, 2, 0.5)
  for (int i = 1; i < 4; ++i) EXPECT_TRUE(j["propositions"][i]["holds"].get<bool>()) << i;
  EXPECT_EQ(r.code, kViolated);
}

TEST(Means, SkippedPropositionsAndBadP) {
  EXPECT_EQ(run({"means", "--p", "0"}).code, kUsage);
  const CliResult r = run({"means", "--a", "1", "--b", "2", "--alpha", "0.75", "--q", "1", "--p", "3"});
  const auto j = r.json();
  EXPECT_TRUE(j["propositions"][3].contains("skipped"));
  EXPECT_EQ(r.code, kHolds);
}

TEST(Sweep, DefaultExample) {
  const CliResult gated =
      run({"--check-hypothesis", "sweep", "--count", "100", "--fn", "pow:0.5", "--statement", "thm-2.3"});
  ASSERT_EQ(gated.code, kHolds) << gated.err;
  const auto j = gated.json();
  EXPECT_EQ(j["rows"].size(), 100u);
  for (const auto& row : j["rows"]) EXPECT_NE(row["status"], "violated");
  EXPECT_TRUE(j["summary"]["ok"].get<bool>());

  // Ungated, tuple 22 falls outside the hypothesis and violates the bound.
  const CliResult ungated = run({"sweep", "--count", "100", "--fn", "pow:0.5", "--statement", "thm-2.3"});
  EXPECT_EQ(ungated.code, kViolated);
  int holding = 0;
  const auto uj = ungated.json();
  for (const auto& row : uj["rows"]) holding += row["holds"].get<bool>() ? 1 : 0;
  EXPECT_EQ(holding, 99);
}

TEST(Sweep, NegIdentityWithHypothesis) {
  const CliResult r = run({"--check-hypothesis", "sweep", "--count", "10", "--fn", "neg-identity", "--statement", "thm-2.2"});
  ASSERT_EQ(r.code, kHolds);
  const auto j = r.json();
  ASSERT_EQ(j["rows"].size(), 10u);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["status"], "hypothesis-failed");
}

TEST(Sweep, ViolationsProduceCounterexamples) {
  const CliResult r = run({"--thm24-factor", "printed", "sweep", "--count", "5", "--fn", "identity", "--statement",
                     "thm-2.4", "--a-range", "2", "3", "--b-range", "4", "8", "--alpha-range", "1", "1",
                     "--m-range", "1", "1", "--q-range", "2", "3", "--max-shrink", "1"});
  EXPECT_EQ(r.code, kViolated);
  EXPECT_EQ(r.json()["counterexamples"].size(), 1u);
}

TEST(Sweep, FilesAreByteIdenticalAcrossRunsAndThreads) {
  const auto dir = temp_dir();
  const std::string a = (dir / "a.csv").string();
  const std::string b = (dir / "b.csv").string();
  ASSERT_EQ(run({"--seed", "7", "--check-hypothesis", "--format", "csv", "--output", a.c_str(), "sweep", "--count", "30", "--fn", "pow:0.5",
                 "--fn", "identity", "--statement", "thm-2.2", "--statement", "thm-2.5", "--threads", "1"})
                .code,
            kHolds);
  ASSERT_EQ(run({"--seed", "7", "--check-hypothesis", "--format", "csv", "--output", b.c_str(), "sweep", "--count", "30", "--fn", "pow:0.5",
                 "--fn", "identity", "--statement", "thm-2.2", "--statement", "thm-2.5", "--threads", "3"})
                .code,
            kHolds);
  const std::string ca = slurp(a);
  EXPECT_FALSE(ca.empty());
  EXPECT_EQ(ca, slurp(b));
  std::filesystem::remove_all(dir);
}

TEST(Sweep, SeedChangesOutput) {
  const CliResult a = run({"--seed", "1", "sweep", "--count", "3"});
  const CliResult b = run({"--seed", "2", "sweep", "--count", "3"});
  EXPECT_NE(a.out, b.out);
}

TEST(Output, DirectoryOverrideForRelativePaths) {
  const auto dir = temp_dir();
  ::setenv("HHCHECK_OUTPUT_DIR", dir.c_str(), 1);
  const CliResult r = run({"--output", "report.json", "verify", "lemma-1-1"});
  ::unsetenv("HHCHECK_OUTPUT_DIR");
  EXPECT_EQ(r.code, kHolds);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(std::filesystem::exists(dir / "report.json"));
  std::filesystem::remove_all(dir);
}

TEST(Output, UnwritablePathExitsTwo) {
  const CliResult r = run({"--output", "/nonexistent-dir/x.json", "sweep", "--count", "2"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(Help, ExitsZero) {
  EXPECT_EQ(run({"--help"}).code, kHolds);
  EXPECT_EQ(run({"--version"}).code, kHolds);
  EXPECT_NE(run({"--version"}).out.find("0.1.0"), std::string::npos);
}

}  // namespace
}  // namespace hhcheck
