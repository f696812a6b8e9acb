#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ridematch/csv.hpp"
#include "ridematch/runner.hpp"

namespace ridematch {
namespace {

namespace fs = std::filesystem;

ScenarioConfig small_config() {
  ScenarioConfig c;
  c.network.grid = GridSpec{3, 3, 400, 60};
  c.demand.rate_per_hour = 200;
  c.loading_period = 600;
  c.fleet_size = 3;
  c.seed = 4;
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ridematch_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

using Runner = TempDir;

TEST_F(Runner, WritesArtifactsAndReplaysFromManifest) {
  auto out = run_to_directory(small_config(), (dir_ / "a").string());
  EXPECT_TRUE(fs::exists(out.trip_log_path));
  EXPECT_TRUE(fs::exists(out.metrics_path));
  EXPECT_TRUE(fs::exists(out.manifest_path));

  ScenarioConfig replay = load_config_file(out.manifest_path);
  auto again = run_to_directory(replay, (dir_ / "b").string());
  EXPECT_EQ(slurp(out.trip_log_path), slurp(again.trip_log_path));
  EXPECT_EQ(slurp(out.manifest_path), slurp(again.manifest_path));

  std::ifstream m(out.metrics_path);
  auto rows = read_csv(m);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], metrics_header());
}

TEST(Sweep, CrossProductCounts) {
  SweepSpec spec;
  spec.base = small_config();
  spec.axes.fleet_size = {2, 3};
  spec.axes.matcher = {MatcherKind::kGmoMatch, MatcherKind::kBaseline};
  spec.seeds = {1, 2, 3};
  EXPECT_EQ(expand_sweep(spec).size(), 12u);

  SweepSpec empty;
  empty.base = small_config();
  auto one = expand_sweep(empty);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(dump_config(one[0]), dump_config(empty.base));

  spec.max_combinations = 11;
  EXPECT_THROW(expand_sweep(spec), ValidationError);
}

TEST(Sweep, CapacityAxisAndInvalidCombination) {
  SweepSpec spec;
  spec.base = small_config();
  spec.axes.capacity = {4, 6, 10};
  auto configs = expand_sweep(spec);
  ASSERT_EQ(configs.size(), 3u);
  EXPECT_EQ(configs[2].capacity, 10);
  spec.axes.capacity = {0};
  EXPECT_THROW(expand_sweep(spec), ValidationError);
}

TEST(Sweep, FailuresBecomeRows) {
  SweepSpec spec;
  spec.base = small_config();
  spec.base.network = NetworkSource{"/definitely/missing.json", std::nullopt};
  spec.seeds = {1, 2};
  auto rows = run_sweep(spec, 2);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) {
    EXPECT_FALSE(r.metrics);
    EXPECT_NE(r.error.find("/definitely/missing.json"), std::string::npos);
  }
  std::ostringstream out;
  write_sweep_csv(out, rows);
  std::istringstream in(out.str());
  auto csv = read_csv(in);
  ASSERT_EQ(csv.size(), 3u);
  EXPECT_EQ(csv[1][8], "failed");
  EXPECT_EQ(csv[1].size(), csv[0].size());
  std::set<std::string> names(csv[0].begin(), csv[0].end());
  EXPECT_EQ(names.size(), csv[0].size());
}

TEST(Sweep, ParallelMatchesSerial) {
  SweepSpec spec;
  spec.base = small_config();
  spec.axes.matcher = {MatcherKind::kGmoMatch, MatcherKind::kBaseline};
  spec.seeds = {1, 2};
  auto serial = run_sweep(spec, 1);
  auto parallel = run_sweep(spec, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    ASSERT_TRUE(serial[i].metrics && parallel[i].metrics);
    EXPECT_EQ(serial[i].metrics->served, parallel[i].metrics->served);
    EXPECT_EQ(serial[i].metrics->avg_vkt_km, parallel[i].metrics->avg_vkt_km);
  }
}

TEST(Sweep, ParsesSpec) {
  auto spec = parse_sweep(R"({
    "base": {"network": {"grid": {"rows": 2, "cols": 2, "link_length_m": 100, "link_travel_time_s": 30}},
             "demand": {"type": "uniform", "rate_per_hour": 10}, "loading_period_s": 60,
             "fleet_size": 1, "capacity": 2, "flexibility_s": 60, "update_interval_s": 30,
             "matcher": "baseline", "seed": 1},
    "axes": {"fleet_size": [1, 2], "demand_scale": [0.5, 1.0], "matcher": ["gmomatch"]},
    "seeds": [7, 8, 9]})");
  EXPECT_EQ(expand_sweep(spec).size(), 12u);
  EXPECT_THROW(parse_sweep(R"({"base": {}, "axes": {"speed": [1]}})"), ParseError);
}

TEST(Compare, ColocatedScenarioFavoursCombining) {
  // Heavy demand out of a single node, one vehicle: combining serves more.
  ScenarioConfig c;
  c.network.grid = GridSpec{1, 4, 400, 60};
  c.demand.kind = DemandKind::kOdRates;
  c.demand.od_rates = {{NodeId{0}, NodeId{3}, 240}};
  c.loading_period = 900;
  c.fleet_size = 1;
  c.capacity = 4;
  c.flexibility = 120;
  c.seed = 3;
  auto cmp = run_comparison(c);
  EXPECT_EQ(cmp.gmomatch.generated, cmp.baseline.generated);
  EXPECT_GT(*cmp.gmomatch.service_rate, *cmp.baseline.service_rate);

  std::ostringstream out;
  write_comparison_csv(out, cmp);
  std::istringstream in(out.str());
  auto rows = read_csv(in);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"metric", "gmomatch", "baseline", "delta"}));
  bool found = false;
  for (const auto& r : rows) {
    if (r[0] != "service_rate_pct") continue;
    found = true;
    EXPECT_GT(std::stod(r[3]), 0.0);
  }
  EXPECT_TRUE(found);
}

TEST(Compare, SingleRequestDeltasAreZero) {
  ScenarioConfig c;
  c.network.grid = GridSpec{1, 3, 400, 60};
  c.demand.kind = DemandKind::kOdRates;
  c.demand.od_rates = {{NodeId{0}, NodeId{2}, 3600.0}};
  c.loading_period = 2;  // a handful of riders at most
  c.fleet_size = 1;
  c.seed = 1;
  for (std::uint64_t seed = 1; seed < 50; ++seed) {
    c.seed = seed;
    auto cmp = run_comparison(c);
    if (cmp.gmomatch.generated != 1) continue;
    std::ostringstream out;
    write_comparison_csv(out, cmp);
    std::istringstream in(out.str());
    auto rows = read_csv(in);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i][0].ends_with("_s")) continue;  // wall-clock timings
      if (rows[i][3] != "NA") EXPECT_EQ(std::stod(rows[i][3]), 0.0) << rows[i][0];
    }
    return;
  }
  FAIL() << "no seed produced exactly one request";
}

}  // namespace
}  // namespace ridematch
