#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli_app.hpp"

namespace dipolewave::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dipolewave");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string data_lines(const std::string& csv);

// Value of `column` in the first data row of a CSV table.
double csv_value(const std::string& csv, const std::string& column) {
  std::istringstream in(data_lines(csv));
  std::string header, row, cell;
  std::getline(in, header);
  std::getline(in, row);
  std::istringstream hs(header), rs(row);
  while (std::getline(hs, cell, ',')) {
    std::string value;
    std::getline(rs, value, ',');
    if (cell == column) return std::stod(value);
  }
  ADD_FAILURE() << "no column " << column;
  return NAN;
}

std::string data_lines(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.starts_with("#")) out += line + "\n";
  }
  return out;
}

// Tests run as separate processes under ctest, so each gets its own directory.
fs::path scratch_dir() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  const fs::path dir = fs::temp_directory_path() / ("dipolewave_cli_" + std::string(info->name()));
  fs::create_directories(dir);
  return dir;
}

TEST(Cli, OverlapDefaultsToQuabisPlaneLimit) {
  const auto r = invoke({"overlap", "--a", "0", "--theta-deg", "90"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("# subcommand: overlap"), std::string::npos);
  EXPECT_NEAR(csv_value(r.out, "p"), 64.0 / 147.0, 1e-10);
}

TEST(Cli, JsonFormat) {
  const auto r = invoke({"--format", "json", "overlap", "--family", "sine"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"columns\""), std::string::npos);
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(invoke({"overlap", "--family", "sine", "--theta-deg", "120"}).code, kExitUsage);
  EXPECT_EQ(invoke({"overlap", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"overlap", "--family", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"stats", "--s", "-1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "--lo", "2", "--hi", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  const auto r = invoke({"overlap", "--family", "sine", "--theta-deg", "120"});
  EXPECT_NE(r.err.find("pi/2"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("fig1"), std::string::npos);
}

TEST(Cli, StatsPoleEmitsTokens) {
  const auto r = invoke({"stats", "--eta-re", "2", "--s", "1e-10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find(",inf,"), std::string::npos);
  EXPECT_NE(r.out.find("undefined"), std::string::npos);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const fs::path dir = scratch_dir();
  const fs::path cfg = dir / "cfg.json";
  std::ofstream(cfg) << R"({"overlap": {"family": "truncated-dipole", "theta-deg": 180}})";
  const auto from_file = invoke({"--config", cfg.string(), "overlap"});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_NE(from_file.out.find("# family: truncated-dipole"), std::string::npos);
  EXPECT_NEAR(csv_value(from_file.out, "p"), 1.0, 1e-12);
  const auto overridden = invoke({"--config", cfg.string(), "overlap", "--theta-deg", "90"});
  ASSERT_EQ(overridden.code, kExitOk) << overridden.err;
  EXPECT_NEAR(csv_value(overridden.out, "p"), 0.5, 1e-12);
  fs::remove_all(dir);
}

TEST(Cli, OutFileAndThreadIndependence) {
  const fs::path dir = scratch_dir();
  ASSERT_EQ(invoke({"--out", (dir / "a.csv").string(), "fig3"}).code, kExitOk);
  ASSERT_EQ(invoke({"--threads", "4", "--out", (dir / "b.csv").string(), "fig3"}).code, kExitOk);
  const std::string a = slurp(dir / "a.csv"), b = slurp(dir / "b.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(data_lines(a), data_lines(b));
  EXPECT_EQ(invoke({"--out", (dir / "missing" / "x.csv").string(), "fig1"}).code, kExitUsage);
  fs::remove_all(dir);
}

TEST(Cli, RerunsAreByteIdentical) {
  const fs::path dir = scratch_dir();
  const std::string bin = DIPOLEWAVE_CLI_PATH;
  for (const char* name : {"r1.csv", "r2.csv"}) {
    const std::string cmd = "\"" + bin + "\" --threads 3 sweep --var a --lo 0 --hi 3 --steps 31 > \"" +
                            (dir / name).string() + "\"";
    ASSERT_EQ(std::system(cmd.c_str()), 0) << cmd;
  }
  const std::string r1 = slurp(dir / "r1.csv");
  EXPECT_NE(r1.find("# input_hash: "), std::string::npos);
  EXPECT_EQ(r1, slurp(dir / "r2.csv"));
  fs::remove_all(dir);
}

}  // namespace
}  // namespace dipolewave::cli
