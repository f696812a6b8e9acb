// ridematch: run, sweep and compare ride-matching scenarios.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ridematch/metrics.hpp"
#include "ridematch/runner.hpp"
#include "ridematch/scenario.hpp"

namespace {

using namespace ridematch;

struct Options {
  std::string config;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::string matcher;
  int jobs = 1;
};

ScenarioConfig load_with_overrides(const Options& opt) {
  ScenarioConfig config = load_config_file(opt.config);
  if (opt.seed) config.seed = *opt.seed;
  if (!opt.matcher.empty()) {
    auto kind = parse_matcher(opt.matcher);
    if (!kind) throw ValidationError("unknown matcher '" + opt.matcher + "'");
    config.matcher = *kind;
  }
  return config;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

int cmd_validate(const Options& opt) {
  ScenarioConfig config = load_with_overrides(opt);
  RoadNetwork net = load_scenario_network(config);
  std::cout << "ok: " << net.node_count() << " nodes, " << net.links().size()
            << " links, matcher " << to_string(config.matcher) << ", seed "
            << config.seed << '\n';
  return 0;
}

int cmd_run(const Options& opt) {
  ScenarioConfig config = load_with_overrides(opt);
  RunOutputs out = run_to_directory(config, opt.out_dir);
  std::cout << format_summary(out.metrics);
  std::cout << "wrote " << out.trip_log_path << ", " << out.metrics_path
            << ", " << out.manifest_path << '\n';
  return 0;
}

int cmd_sweep(const Options& opt) {
  SweepSpec spec = load_sweep_file(opt.config);
  if (opt.seed) spec.seeds = {*opt.seed};
  if (!opt.matcher.empty()) {
    auto kind = parse_matcher(opt.matcher);
    if (!kind) throw ValidationError("unknown matcher '" + opt.matcher + "'");
    spec.axes.matcher = {*kind};
  }
  auto rows = run_sweep(spec, opt.jobs);
  auto path = std::filesystem::path(opt.out_dir) / "sweep.csv";
  auto file = open_output(path);
  write_sweep_csv(file, rows);
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.metrics ? 0 : 1;
  std::cout << rows.size() << " runs (" << failed << " failed), wrote "
            << path.string() << '\n';
  return 0;
}

int cmd_compare(const Options& opt) {
  ScenarioConfig config = load_with_overrides(opt);
  Comparison cmp = run_comparison(config);
  auto path = std::filesystem::path(opt.out_dir) / "comparison.csv";
  auto file = open_output(path);
  write_comparison_csv(file, cmp);
  write_comparison_csv(std::cout, cmp);
  std::cout << "wrote " << path.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic many-to-one ride matching simulator"};
  app.set_version_flag("--version", std::string(ridematch::library_version()));
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, const char* config_help) {
    sub->add_option("--config", opt.config, config_help)->required();
    sub->add_option("--seed", opt.seed, "Override the scenario seed");
    sub->add_option("--matcher", opt.matcher, "gmomatch or baseline")
        ->check(CLI::IsMember({"gmomatch", "baseline"}));
  };

  auto* validate = app.add_subcommand("validate", "Check a scenario config");
  add_common(validate, "Scenario config (JSON)");

  auto* run = app.add_subcommand("run", "Run one scenario");
  add_common(run, "Scenario config or run manifest (JSON)");
  run->add_option("--out-dir", opt.out_dir, "Output directory");

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  add_common(sweep, "Sweep spec (JSON)");
  sweep->add_option("--out-dir", opt.out_dir, "Output directory");
  sweep->add_option("--jobs", opt.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare", "Run both matchers on one scenario");
  add_common(compare, "Scenario config (JSON)");
  compare->add_option("--out-dir", opt.out_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (run->parsed()) return cmd_run(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (compare->parsed()) return cmd_compare(opt);
  } catch (const std::exception& e) {
    std::cerr << "ridematch: error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
