#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "hlineq/json_io.hpp"

namespace hlineq {
namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args, cli::Environment env = {}) {
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, out, err, env);
  o.out = out.str();
  o.err = err.str();
  return o;
}

TEST(CliTest, ExponentsNewIsotropic) {
  const Outcome o = run_cli({"exponents", "--m", "2", "--p", "4", "--regime", "new-isotropic"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = Json::parse(o.out);
  const Json& row = j["result"]["regimes"][0];
  EXPECT_EQ(row["exponents"]["rho"].get<double>(), 2.0);
  EXPECT_NEAR(row["constant"].get<double>(), std::sqrt(2.0), 1e-12);
}

TEST(CliTest, ExponentsInapplicableNamesInequality) {
  const Outcome o = run_cli({"exponents", "--m", "2", "--p", "2", "--regime", "new-isotropic"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("sum 1/p_k < 1"), std::string::npos) << o.err;
}

TEST(CliTest, ExponentsLadder) {
  const Outcome o = run_cli({"exponents", "--m", "2", "--p", "4", "--q", "inf", "--lambda0", "4/3"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["result"]["ladder"]["eta1"].get<double>(), 4.0);
  EXPECT_EQ(j["result"]["ladder"]["eta2"].get<double>(), 2.0);
}

TEST(CliTest, VerifyContraction) {
  const Outcome o = run_cli({"verify", "--suite", "contraction", "--m", "2", "--n", "3", "--samples", "100", "--seed", "7"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(Json::parse(o.out)["result"][0]["pass"].get<bool>());
}

TEST(CliTest, SweepCsvWhenPiped) {
  const Outcome o = run_cli({"sweep", "--m", "2", "--n", "2,3", "--p", "2.5,3,4", "--regime", "new-isotropic",
                             "--samples", "20", "--budget", "100", "--seed", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream lines(o.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, kSweepCsvHeader);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_NE(line.find(",PASS"), std::string::npos) << line;
    EXPECT_EQ(line.find(",-"), std::string::npos) << line;  // no negative margin
  }
  EXPECT_EQ(rows, 6);
}

TEST(CliTest, SweepJsonLinesAreByteIdentical) {
  const std::vector<std::string> args{"sweep", "--m", "3", "--n", "2", "--p", "4", "--regime", "anisotropic-2m-minus-2",
                                      "--samples", "10", "--budget", "50", "--seed", "3", "--format", "json"};
  const Outcome a = run_cli(args);
  const Outcome b = run_cli(args, {false, "2"});
  ASSERT_EQ(a.code, 0) << a.err;
  // Only the threads entry of the config line may differ.
  EXPECT_EQ(a.out.substr(a.out.find('\n')), b.out.substr(b.out.find('\n')));
  EXPECT_EQ(run_cli(args).out, a.out);
}

TEST(CliTest, PrettyOnTerminal) {
  const Outcome o = run_cli({"bounds", "--m", "3", "--p", "4"}, {true, std::nullopt});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("anisotropic-2m-minus-2"), std::string::npos);
  EXPECT_EQ(o.out.find('{'), std::string::npos);
}

TEST(CliTest, FormFileXorGenerator) {
  const auto path = (std::filesystem::temp_directory_path() / "hlineq_cli_form.json").string();
  write_form_file(path, MultilinearForm(2, 2, {1, 1, 1, -1}));
  const Outcome ok = run_cli({"ratio", "--form", path, "--p", "inf", "--regime", "bohnenblust-hille"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_NEAR(Json::parse(ok.out)["result"]["ratio"].get<double>(), std::sqrt(2.0), 1e-12);
  const Outcome both = run_cli({"ratio", "--form", path, "--m", "2", "--p", "inf", "--regime", "bohnenblust-hille"});
  EXPECT_EQ(both.code, 2);
  EXPECT_NE(both.err.find("mutually exclusive"), std::string::npos);
  std::filesystem::remove(path);
  const Outcome none = run_cli({"ratio", "--p", "inf", "--regime", "bohnenblust-hille"});
  EXPECT_EQ(none.code, 2);
}

TEST(CliTest, GeneratorNeedsSeed) {
  EXPECT_EQ(run_cli({"norm", "--m", "2", "--n", "3", "--p", "4"}).code, 2);
  const Outcome o = run_cli({"norm", "--m", "2", "--n", "3", "--p", "4", "--seed", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["config"]["starts"].get<int>(), 32);
  EXPECT_EQ(j["result"]["status"], "heuristic_lower_bound");
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"exponents", "--m", "2", "--p", "4", "--regime", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"exponents", "--m", "2", "--p", "4", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"bounds", "--p", "4"}, {false, "zero"}).code, 0);  // threads unused outside sweeps
  EXPECT_EQ(run_cli({"sweep", "--m", "2", "--n", "2", "--p", "4", "--seed", "1"}, {false, "zero"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(CliTest, CapacityErrorNamesBudget) {
  const Outcome o = run_cli({"norm", "--m", "5", "--n", "5", "--p", "inf", "--seed", "1", "--method", "exact"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("2^25"), std::string::npos) << o.err;
}

TEST(CliTest, SearchLittlewood) {
  const Outcome o = run_cli({"search", "--m", "2", "--n", "2", "--p", "inf", "--regime", "bohnenblust-hille",
                             "--seed", "1", "--budget", "2000"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["result"]["label"], "certified");
  EXPECT_GE(j["result"]["best"]["ratio"].get<double>(), std::sqrt(2.0) - 1e-3);
}

TEST(CliTest, MixedModes) {
  const auto path = (std::filesystem::temp_directory_path() / "hlineq_cli_mixed.json").string();
  write_form_file(path, MultilinearForm(2, 2, {1, 1, 1, 1}));
  const Outcome o = run_cli({"mixed", "--form", path, "--slot", "1", "--inner", "2", "--outer", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NEAR(Json::parse(o.out)["result"]["value"].get<double>(), 2.0 * std::sqrt(2.0), 1e-14);
  EXPECT_EQ(run_cli({"mixed", "--form", path, "--rho", "2", "--slot", "1"}).code, 2);
  std::filesystem::remove(path);
}

TEST(CliTest, VerifyAllSuites) {
  const Outcome o = run_cli({"verify", "--samples", "20", "--seed", "2", "--budget", "300"});
  EXPECT_EQ(o.code, 0) << o.err << o.out;
  EXPECT_EQ(Json::parse(o.out)["result"].size(), 4U);
}

}  // namespace
}  // namespace hlineq
