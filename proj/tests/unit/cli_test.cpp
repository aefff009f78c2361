#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace arithcorr::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("arithcorr_cli_test_" + name);
}

TEST(Cli, PrimpolysListsEveryPolynomial) {
  const Result r5 = run_cli({"primpolys", "--degree", "5"});
  EXPECT_EQ(r5.code, kSuccess);
  EXPECT_EQ(lines(r5.out).size(), 7u);  // header + 6
  EXPECT_EQ(lines(r5.out).front().front(), '#');

  const Result r8 = run_cli({"--format", "csv", "primpolys", "-n", "8"});
  EXPECT_EQ(lines(r8.out).size(), 17u);
  EXPECT_EQ(lines(r8.out).front(), "degree,poly_hex,poly");
}

TEST(Cli, GenPrintsOnePeriod) {
  EXPECT_EQ(run_cli({"gen", "--poly", "x^3+x^2+1"}).out, "0011101\n");
  EXPECT_EQ(run_cli({"gen", "--poly", "0x13"}).out, "000100110101111\n");
  EXPECT_EQ(run_cli({"gen", "--poly", "0x13", "--phase", "3"}).out, "100110101111000\n");
  EXPECT_EQ(run_cli({"gen", "--poly", "x^3+x+1", "--init", "001"}).out, "0010111\n");
}

TEST(Cli, SingleShiftBreakdown) {
  const Result r = run_cli({"acorr", "--seq", "000111101011001", "--tau", "4", "--validate"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  for (const char* needle : {"19832", "17623", "2209", "0,5,7,11", "A^A           7", "(agree)"}) {
    EXPECT_NE(r.out.find(needle), std::string::npos) << needle;
  }
}

TEST(Cli, SpectrumCsvRows) {
  const Result r = run_cli({"--format", "csv", "acorr", "--poly", "0x13", "--all"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 15u);
  EXPECT_EQ(rows[0], "degree,poly_hex,tau,sign,n_ones,correlation");
  EXPECT_EQ(rows[3], "4,0x13,3,positive,11,-7");
}

TEST(Cli, SpectrumJsonParses) {
  const Result r = run_cli({"--format", "json", "acorr", "--seq", "0011101", "--all"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const auto& records = doc.at("degrees").at(0).at("polynomials").at(0).at("records");
  std::vector<std::int64_t> values;
  for (const auto& rec : records) values.push_back(rec.at("correlation").get<std::int64_t>());
  EXPECT_EQ(values, (std::vector<std::int64_t>{-1, 1, 3, -3, -1, 1}));
}

TEST(Cli, ConjectureJsonAndExitCode) {
  const Result r = run_cli({"--format", "json", "conjecture", "--degree", "4"});
  EXPECT_EQ(r.code, kSuccess);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("degrees").at(0).at("polynomials").size(), 2u);
}

TEST(Cli, ConjectureDegree10NamesItsPolynomials) {
  const Result r = run_cli({"--format", "csv", "--no-validate", "table1", "--nmin", "10", "--nmax", "10"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(lines(r.out).size(), 61u);
  EXPECT_NE(r.out.find("10,0x409,"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"primpolys", "--degree", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"primpolys", "--degree", "21"}).code, kUsage);
  EXPECT_EQ(run_cli({"gen", "--poly", "0x17"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"gen", "--poly", "0x13", "--init", "0000"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"gen", "--poly", "0x13", "--init", "000"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"gen", "--poly", "x^^3"}).code, kUsage);
  EXPECT_EQ(run_cli({"acorr", "--seq", "0000000", "--tau", "1"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"acorr", "--seq", "0011101", "--tau", "7"}).code, kUsage);
  EXPECT_EQ(run_cli({"acorr", "--seq", "0011101"}).code, kUsage);
  EXPECT_EQ(run_cli({"acorr", "--tau", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"acorr", "--seq", "0011101", "--poly", "0xb", "--tau", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"--validate", "--no-validate", "gen", "--poly", "0xb"}).code, kUsage);
  EXPECT_EQ(run_cli({"table1", "--nmin", "6", "--nmax", "5"}).code, kUsage);
  EXPECT_EQ(run_cli({"conjecture", "--degree", "13"}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kSuccess);
}

TEST(Cli, ErrorsGoToStderr) {
  const Result r = run_cli({"gen", "--poly", "0x17"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("not primitive"), std::string::npos);
}

TEST(Cli, OutputFile) {
  const auto path = temp_file("out.txt");
  std::filesystem::remove(path);
  const Result r = run_cli({"--output", path.string(), "gen", "--poly", "0xb"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string content;
  std::getline(in, content);
  EXPECT_EQ(content, "0010111");
  std::filesystem::remove(path);
}

TEST(Cli, ConfigFileSuppliesGlobalOptions) {
  const auto path = temp_file("config.toml");
  {
    std::ofstream cfg(path);
    cfg << "format = \"csv\"\n";
  }
  const Result r = run_cli({"--config", path.string(), "primpolys", "-n", "3"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(lines(r.out).front(), "degree,poly_hex,poly");
  std::filesystem::remove(path);
}

TEST(Cli, JobsComeFromEnvironment) {
  ::setenv("ARITHCORR_JOBS", "not-a-number", 1);
  EXPECT_EQ(run_cli({"primpolys", "-n", "3"}).code, kUsage);
  ::setenv("ARITHCORR_JOBS", "3", 1);
  EXPECT_EQ(run_cli({"primpolys", "-n", "3"}).code, kSuccess);
  ::unsetenv("ARITHCORR_JOBS");
}

TEST(Cli, OutputIndependentOfJobs) {
  const std::vector<std::string> cmd{"--format", "csv", "table1", "--nmin", "3", "--nmax", "9"};
  auto one = cmd;
  one.insert(one.begin(), {"--jobs", "1"});
  auto four = cmd;
  four.insert(four.begin(), {"--jobs", "4"});
  EXPECT_EQ(run_cli(one).out, run_cli(four).out);
}

}  // namespace
}  // namespace arithcorr::cli
