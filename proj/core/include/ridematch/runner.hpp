#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ridematch/metrics.hpp"
#include "ridematch/scenario.hpp"
#include "ridematch/simulator.hpp"

namespace ridematch {

std::string_view library_version();

/// FNV-1a 64 of the canonical config document.
std::uint64_t config_hash(const ScenarioConfig& config);

/// Reproducibility manifest: version, config hash, seed and the full
/// canonical config. Accepted by load_config_file.
std::string make_manifest(const ScenarioConfig& config);

struct RunOutputs {
  std::string trip_log_path;
  std::string metrics_path;
  std::string manifest_path;
  MetricsReport metrics;
  SimulationResult result;
};

/// Runs one scenario and writes trip_log.csv, metrics.csv and
/// manifest.json into `out_dir` (created if needed).
RunOutputs run_to_directory(const ScenarioConfig& config,
                            const std::string& out_dir);

struct SweepAxes {
  std::vector<int> fleet_size;
  std::vector<double> demand_scale;
  std::vector<int> capacity;
  std::vector<Seconds> flexibility;
  std::vector<Seconds> update_interval;
  std::vector<MatcherKind> matcher;
};

struct SweepSpec {
  ScenarioConfig base;
  SweepAxes axes;
  /// Empty means the base config's seed only.
  std::vector<std::uint64_t> seeds;
  std::size_t max_combinations = 10000;
};

/// {"base": <config object or path>, "axes": {...}, "seeds": [...],
///  "max_combinations": N}
SweepSpec parse_sweep(const std::string& document,
                      const std::string& base_dir = ".");
SweepSpec load_sweep_file(const std::string& path);

/// Cross product of the axes times the seeds, each validated. Throws
/// ValidationError when the product exceeds max_combinations.
std::vector<ScenarioConfig> expand_sweep(const SweepSpec& spec);

struct SweepRow {
  ScenarioConfig config;
  std::optional<MetricsReport> metrics;
  std::string error;
};

/// Runs every expanded scenario on `jobs` worker threads. A failing
/// scenario becomes a row with an error message; the sweep continues.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct Comparison {
  MetricsReport gmomatch;
  MetricsReport baseline;
};

/// Runs both matchers on the same demand and fleet draw (same seed).
Comparison run_comparison(const ScenarioConfig& config);

/// metric,gmomatch,baseline,delta (delta = gmomatch - baseline).
void write_comparison_csv(std::ostream& out, const Comparison& comparison);

}  // namespace ridematch
