#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "ridematch/csv.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string output;
};

Result run(const std::string& args) {
  std::string cmd = std::string(RIDEMATCH_CLI) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data(const char* name) { return std::string(RIDEMATCH_DATA_DIR) + "/" + name; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ridematch_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // A small, fast scenario next to the bundled network.
  std::string small_config() {
    auto path = dir_ / "small.json";
    std::ofstream(path) << R"({
      "network": {"file": ")" << data("grid_8x8.json") << R"("},
      "demand": {"type": "uniform", "rate_per_hour": 150},
      "loading_period_s": 600, "fleet_size": 4, "capacity": 4,
      "flexibility_s": 300, "update_interval_s": 30, "matcher": "gmomatch", "seed": 2})";
    return path.string();
  }

  fs::path dir_;
};

TEST_F(Cli, Validate) {
  auto r = run("validate --config " + data("scenario.json"));
  EXPECT_EQ(r.code, 0) << r.output;
  EXPECT_NE(r.output.find("64 nodes"), std::string::npos);
}

TEST_F(Cli, RunWritesArtifactsDeterministically) {
  auto cfg = small_config();
  auto a = run("run --config " + cfg + " --out-dir " + (dir_ / "a").string());
  ASSERT_EQ(a.code, 0) << a.output;
  for (const char* f : {"trip_log.csv", "metrics.csv", "manifest.json"}) {
    EXPECT_TRUE(fs::exists(dir_ / "a" / f)) << f;
  }
  auto b = run("run --config " + cfg + " --out-dir " + (dir_ / "b").string());
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(slurp(dir_ / "a" / "trip_log.csv"), slurp(dir_ / "b" / "trip_log.csv"));

  auto c = run("run --config " + (dir_ / "a" / "manifest.json").string() + " --out-dir " +
               (dir_ / "c").string());
  ASSERT_EQ(c.code, 0) << c.output;
  EXPECT_EQ(slurp(dir_ / "a" / "trip_log.csv"), slurp(dir_ / "c" / "trip_log.csv"));
}

TEST_F(Cli, SeedAndMatcherOverrides) {
  auto cfg = small_config();
  auto a = run("run --config " + cfg + " --seed 11 --matcher baseline --out-dir " +
               (dir_ / "a").string());
  ASSERT_EQ(a.code, 0) << a.output;
  auto manifest = slurp(dir_ / "a" / "manifest.json");
  EXPECT_NE(manifest.find("\"baseline\""), std::string::npos);
  EXPECT_NE(manifest.find("\"seed\": 11"), std::string::npos);
  EXPECT_NE(run("run --config " + cfg + " --matcher greedy").code, 0);
}

TEST_F(Cli, MissingNetworkNamesPath) {
  auto path = dir_ / "bad.json";
  std::ofstream(path) << R"({
    "network": {"file": "nowhere/net.json"},
    "demand": {"type": "uniform", "rate_per_hour": 10},
    "loading_period_s": 60, "fleet_size": 1, "capacity": 4,
    "flexibility_s": 300, "update_interval_s": 30, "matcher": "gmomatch", "seed": 1})";
  auto r = run("run --config " + path.string() + " --out-dir " + (dir_ / "o").string());
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.output.find("nowhere/net.json"), std::string::npos) << r.output;
}

TEST_F(Cli, BadInvocations) {
  EXPECT_NE(run("").code, 0);
  EXPECT_NE(run("run").code, 0);
  EXPECT_NE(run("run --config /does/not/exist.json").code, 0);
  EXPECT_EQ(run("--version").code, 0);
}

TEST_F(Cli, SweepRowsMatchCrossProduct) {
  auto base = small_config();
  auto spec = dir_ / "sweep.json";
  std::ofstream(spec) << R"({"base": ")" << base << R"(",
    "axes": {"fleet_size": [2, 3], "matcher": ["gmomatch", "baseline"]},
    "seeds": [1, 2, 3]})";
  auto r = run("sweep --config " + spec.string() + " --jobs 4 --out-dir " + dir_.string());
  ASSERT_EQ(r.code, 0) << r.output;
  std::ifstream in(dir_ / "sweep.csv");
  auto rows = ridematch::read_csv(in);
  EXPECT_EQ(rows.size(), 13u);

  auto empty = dir_ / "empty.json";
  std::ofstream(empty) << R"({"base": ")" << base << R"("})";
  r = run("sweep --config " + empty.string() + " --out-dir " + (dir_ / "e").string());
  ASSERT_EQ(r.code, 0) << r.output;
  std::ifstream in2(dir_ / "e" / "sweep.csv");
  EXPECT_EQ(ridematch::read_csv(in2).size(), 2u);
}

TEST_F(Cli, CompareWritesPairedDeltas) {
  auto r = run("compare --config " + small_config() + " --out-dir " + dir_.string());
  ASSERT_EQ(r.code, 0) << r.output;
  std::ifstream in(dir_ / "comparison.csv");
  auto rows = ridematch::read_csv(in);
  ASSERT_GT(rows.size(), 1u);
  EXPECT_EQ(rows[0][3], "delta");
}

}  // namespace
