#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ridematch/engine.hpp"
#include "ridematch/network.hpp"
#include "ridematch/types.hpp"

namespace ridematch {

struct GridSpec {
  int rows = 8;
  int cols = 8;
  double link_length_m = 400.0;
  Seconds link_travel_time = 60;
};

/// Either a network file (resolved against the config's directory) or a
/// generated grid.
struct NetworkSource {
  std::optional<std::string> file;
  std::optional<GridSpec> grid;
};

struct OdRate {
  NodeId origin;
  NodeId destination;
  double per_hour = 0.0;
};

enum class DemandKind {
  /// `rate_per_hour` spread evenly over every ordered pair of distinct nodes.
  kUniform,
  /// Explicit per-OD Poisson rates.
  kOdRates,
  /// Requests read from a CSV file.
  kFile,
};

struct DemandModel {
  DemandKind kind = DemandKind::kUniform;
  double rate_per_hour = 0.0;
  std::vector<OdRate> od_rates;
  std::optional<std::string> requests_file;
  /// Multiplies every rate; ignored for file demand.
  double scale = 1.0;
};

struct ScenarioConfig {
  NetworkSource network;
  DemandModel demand;
  Seconds loading_period = 900;
  int fleet_size = 1;
  int capacity = 4;
  Seconds flexibility = 300;
  Seconds update_interval = 30;
  MatcherKind matcher = MatcherKind::kGmoMatch;
  std::uint64_t seed = 1;
  /// Directory relative paths are resolved against (not serialised).
  std::string base_dir = ".";
};

/// Parses a scenario document (JSON). Unknown fields are rejected. A
/// run manifest is accepted as well; its embedded config is used.
ScenarioConfig parse_config(const std::string& document,
                            const std::string& base_dir = ".");
ScenarioConfig load_config_file(const std::string& path);

/// Canonical JSON form; parse_config(dump_config(c)) == c.
std::string dump_config(const ScenarioConfig& config);

/// Checks field ranges. Throws ValidationError.
void validate_config(const ScenarioConfig& config);

/// Loads or generates the configured network and checks that every demand
/// OD pair is routable. Throws on failure.
RoadNetwork load_scenario_network(const ScenarioConfig& config);

std::string resolve_path(const std::string& base_dir, const std::string& path);

}  // namespace ridematch
