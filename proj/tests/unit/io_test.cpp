#include <gtest/gtest.h>

#include <sstream>

#include "ridematch/csv.hpp"
#include "ridematch/runner.hpp"
#include "ridematch/scenario.hpp"

namespace ridematch {
namespace {

TEST(Csv, EscapeAndRoundTrip) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  std::vector<std::string> row{"x", "", "a,b", "line\nbreak", "q\"q"};
  std::ostringstream out;
  write_csv_row(out, row);
  write_csv_row(out, std::vector<std::string>{"1", "2"});
  std::istringstream in(out.str() + "\n");
  auto rows = read_csv(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], row);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"1", "2"}));
}

TEST(Csv, CrLfAndStrayQuote) {
  std::istringstream in("a,b\r\n1,2\r\n");
  auto rows = read_csv(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][1], "2");
  std::istringstream bad("ab\"c\n");
  EXPECT_THROW(read_csv(bad), ParseError);
}

const char* kConfig = R"({
  "network": {"grid": {"rows": 3, "cols": 3, "link_length_m": 400, "link_travel_time_s": 60}},
  "demand": {"type": "uniform", "rate_per_hour": 120},
  "loading_period_s": 600, "fleet_size": 4, "capacity": 4,
  "flexibility_s": 300, "update_interval_s": 30, "matcher": "gmomatch", "seed": 9
})";

TEST(Config, ParsesAndRoundTrips) {
  ScenarioConfig c = parse_config(kConfig);
  EXPECT_EQ(c.network.grid->rows, 3);
  EXPECT_EQ(c.demand.kind, DemandKind::kUniform);
  EXPECT_EQ(c.demand.rate_per_hour, 120.0);
  EXPECT_EQ(c.fleet_size, 4);
  EXPECT_EQ(c.seed, 9u);
  ScenarioConfig again = parse_config(dump_config(c));
  EXPECT_EQ(dump_config(again), dump_config(c));
  EXPECT_EQ(config_hash(again), config_hash(c));
}

TEST(Config, ManifestIsAccepted) {
  ScenarioConfig c = parse_config(kConfig);
  ScenarioConfig from_manifest = parse_config(make_manifest(c));
  EXPECT_EQ(dump_config(from_manifest), dump_config(c));
  EXPECT_NE(make_manifest(c).find("fnv1a64:"), std::string::npos);
}

std::string with(const std::string& from, const std::string& to) {
  std::string s = kConfig;
  auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

TEST(Config, RejectsUnknownAndInvalid) {
  EXPECT_THROW(parse_config(with("\"seed\": 9", "\"seed\": 9, \"colour\": 1")), ParseError);
  EXPECT_THROW(parse_config(with("\"rate_per_hour\": 120", "\"rate_per_hour\": 120, \"x\": 0")),
               ParseError);
  EXPECT_THROW(parse_config(with("\"gmomatch\"", "\"greedy\"")), ParseError);
  EXPECT_THROW(parse_config(with("\"update_interval_s\": 30", "\"update_interval_s\": 0")),
               ValidationError);
  EXPECT_THROW(parse_config(with("\"capacity\": 4", "\"capacity\": 0")), ValidationError);
  EXPECT_THROW(parse_config(with("\"flexibility_s\": 300", "\"flexibility_s\": -1")),
               ValidationError);
  EXPECT_THROW(parse_config(with("\"fleet_size\": 4", "\"fleet_size\": 0")), ValidationError);
  EXPECT_THROW(parse_config(with("\"seed\": 9", "\"seed\": -2")), ParseError);
  EXPECT_THROW(parse_config(with("\"fleet_size\": 4,", "")), ParseError);
  EXPECT_THROW(parse_config("{"), ParseError);
}

TEST(Config, OdRatesMustBeRoutable) {
  std::string doc = with(R"({"type": "uniform", "rate_per_hour": 120})",
                         R"({"type": "od_rates", "rates": [{"origin": 0, "destination": 99, "per_hour": 5}]})");
  ScenarioConfig c = parse_config(doc);
  EXPECT_THROW(load_scenario_network(c), Error);
}

TEST(Config, MissingFilesNameThePath) {
  try {
    load_config_file("/no/such/config.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("/no/such/config.json"), std::string::npos);
  }
  ScenarioConfig c = parse_config(with(
      R"("grid": {"rows": 3, "cols": 3, "link_length_m": 400, "link_travel_time_s": 60})",
      R"("file": "missing_net.json")"), "/tmp/somewhere");
  try {
    load_scenario_network(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("/tmp/somewhere/missing_net.json"),
              std::string::npos);
  }
}

}  // namespace
}  // namespace ridematch
