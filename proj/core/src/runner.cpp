#include "ridematch/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "json_util.hpp"
#include "ridematch/csv.hpp"

#ifndef RIDEMATCH_VERSION
#define RIDEMATCH_VERSION "0.0.0"
#endif

namespace ridematch {

using nlohmann::json;

std::string_view library_version() { return RIDEMATCH_VERSION; }

std::uint64_t config_hash(const ScenarioConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump_config(config)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string make_manifest(const ScenarioConfig& config) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(config_hash(config)));
  json doc;
  doc["manifest_version"] = 1;
  doc["artifact_version"] = std::string(library_version());
  doc["config_hash"] = std::string("fnv1a64:") + hash;
  doc["seed"] = config.seed;
  doc["config"] = json::parse(dump_config(config));
  return doc.dump(2) + "\n";
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

// Manifests reference paths relative to the config they came from; make
// them absolute so the manifest can be replayed from the output directory.
ScenarioConfig with_absolute_paths(ScenarioConfig config) {
  auto absolute = [&](const std::string& p) {
    return std::filesystem::absolute(resolve_path(config.base_dir, p))
        .lexically_normal()
        .string();
  };
  if (config.network.file) config.network.file = absolute(*config.network.file);
  if (config.demand.requests_file) {
    config.demand.requests_file = absolute(*config.demand.requests_file);
  }
  return config;
}

std::vector<std::pair<std::string, std::optional<double>>> numeric_metrics(
    const MetricsReport& m) {
  auto count = [](std::size_t n) { return std::optional<double>(static_cast<double>(n)); };
  return {{"generated", count(m.generated)},
          {"served", count(m.served)},
          {"expired", count(m.expired)},
          {"service_rate_pct", m.service_rate},
          {"avg_vkt_km", m.avg_vkt_km},
          {"avg_detour_min", m.avg_detour_min},
          {"avg_wait_min", m.avg_wait_min},
          {"avg_shared_vehicle_travel_time_min", m.avg_shared_vehicle_travel_time_min},
          {"avg_shared_vehicle_speed_kmh", m.avg_shared_vehicle_speed_kmh},
          {"avg_assignments_per_vehicle", m.avg_assignments},
          {"avg_cost_calculation_s", m.avg_cost_calculation_s},
          {"avg_solution_s", m.avg_solution_s},
          {"avg_compute_s", m.avg_compute_s}};
}

}  // namespace

RunOutputs run_to_directory(const ScenarioConfig& config,
                            const std::string& out_dir) {
  RunOutputs out;
  out.result = run_scenario(config);
  out.metrics = compute_metrics(out.result);

  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);

  std::ostringstream trips;
  write_trip_log(trips, out.result.trips);
  std::ostringstream metrics;
  const auto header = metrics_header();
  const auto row = metrics_row(out.metrics);
  write_csv_row(metrics, header);
  write_csv_row(metrics, row);

  out.trip_log_path = (dir / "trip_log.csv").string();
  out.metrics_path = (dir / "metrics.csv").string();
  out.manifest_path = (dir / "manifest.json").string();
  write_file(out.trip_log_path, trips.str());
  write_file(out.metrics_path, metrics.str());
  write_file(out.manifest_path, make_manifest(with_absolute_paths(config)));
  return out;
}

SweepSpec parse_sweep(const std::string& document, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("sweep spec: ") + e.what());
  }
  detail::require_object(doc, "sweep spec");
  detail::reject_unknown(doc, "sweep spec",
                         {"base", "axes", "seeds", "max_combinations"});
  SweepSpec spec;
  const json& base = detail::require_field(doc, "base", "sweep spec");
  if (base.is_string()) {
    spec.base = load_config_file(resolve_path(base_dir, base.get<std::string>()));
  } else {
    spec.base = parse_config(base.dump(), base_dir);
  }

  if (doc.contains("axes")) {
    const json& axes = doc.at("axes");
    detail::require_object(axes, "sweep axes");
    detail::reject_unknown(axes, "sweep axes",
                           {"fleet_size", "demand_scale", "capacity",
                            "flexibility_s", "update_interval_s", "matcher"});
    auto ints = [&](const char* key) {
      std::vector<std::int64_t> out;
      if (!axes.contains(key)) return out;
      for (const auto& v : detail::require_array(axes, key, "sweep axes")) {
        if (!v.is_number_integer()) {
          throw ParseError(std::string("sweep axes: '") + key +
                           "' values must be integers");
        }
        out.push_back(v.get<std::int64_t>());
      }
      return out;
    };
    for (auto v : ints("fleet_size")) spec.axes.fleet_size.push_back(static_cast<int>(v));
    for (auto v : ints("capacity")) spec.axes.capacity.push_back(static_cast<int>(v));
    for (auto v : ints("flexibility_s")) spec.axes.flexibility.push_back(v);
    for (auto v : ints("update_interval_s")) spec.axes.update_interval.push_back(v);
    if (axes.contains("demand_scale")) {
      for (const auto& v : detail::require_array(axes, "demand_scale", "sweep axes")) {
        if (!v.is_number()) throw ParseError("sweep axes: demand_scale values must be numbers");
        spec.axes.demand_scale.push_back(v.get<double>());
      }
    }
    if (axes.contains("matcher")) {
      for (const auto& v : detail::require_array(axes, "matcher", "sweep axes")) {
        auto kind = v.is_string() ? parse_matcher(v.get<std::string>()) : std::nullopt;
        if (!kind) throw ParseError("sweep axes: unknown matcher " + v.dump());
        spec.axes.matcher.push_back(*kind);
      }
    }
  }
  if (doc.contains("seeds")) {
    for (const auto& v : detail::require_array(doc, "seeds", "sweep spec")) {
      if (!v.is_number_unsigned()) throw ParseError("sweep spec: seeds must be non-negative integers");
      spec.seeds.push_back(v.get<std::uint64_t>());
    }
  }
  if (doc.contains("max_combinations")) {
    auto cap = detail::require_int(doc, "max_combinations", "sweep spec");
    if (cap < 1) throw ParseError("sweep spec: max_combinations must be >= 1");
    spec.max_combinations = static_cast<std::size_t>(cap);
  }
  return spec;
}

SweepSpec load_sweep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sweep file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string dir = std::filesystem::path(path).parent_path().string();
  return parse_sweep(buffer.str(), dir.empty() ? "." : dir);
}

std::vector<ScenarioConfig> expand_sweep(const SweepSpec& spec) {
  const ScenarioConfig& b = spec.base;
  auto or_base = [](const auto& axis, auto base_value) {
    using T = decltype(base_value);
    return axis.empty() ? std::vector<T>{base_value}
                        : std::vector<T>(axis.begin(), axis.end());
  };
  const auto fleets = or_base(spec.axes.fleet_size, b.fleet_size);
  const auto scales = or_base(spec.axes.demand_scale, b.demand.scale);
  const auto caps = or_base(spec.axes.capacity, b.capacity);
  const auto flexes = or_base(spec.axes.flexibility, b.flexibility);
  const auto deltas = or_base(spec.axes.update_interval, b.update_interval);
  const auto matchers = or_base(spec.axes.matcher, b.matcher);
  const auto seeds = or_base(spec.seeds, b.seed);

  const std::size_t total = fleets.size() * scales.size() * caps.size() *
                            flexes.size() * deltas.size() * matchers.size() *
                            seeds.size();
  if (total > spec.max_combinations) {
    throw ValidationError("sweep has " + std::to_string(total) +
                          " runs, above max_combinations " +
                          std::to_string(spec.max_combinations));
  }

  std::vector<ScenarioConfig> out;
  out.reserve(total);
  for (int fleet : fleets)
    for (double scale : scales)
      for (int cap : caps)
        for (Seconds flex : flexes)
          for (Seconds delta : deltas)
            for (MatcherKind matcher : matchers)
              for (std::uint64_t seed : seeds) {
                ScenarioConfig c = b;
                c.fleet_size = fleet;
                c.demand.scale = scale;
                c.capacity = cap;
                c.flexibility = flex;
                c.update_interval = delta;
                c.matcher = matcher;
                c.seed = seed;
                validate_config(c);
                out.push_back(std::move(c));
              }
  return out;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs) {
  std::vector<ScenarioConfig> configs = expand_sweep(spec);
  std::vector<SweepRow> rows(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= configs.size()) return;
      rows[i].config = configs[i];
      try {
        rows[i].metrics = compute_metrics(run_scenario(configs[i]));
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(configs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  std::vector<std::string> header{"run",           "seed",      "fleet_size",
                                  "demand_scale",  "capacity",  "flexibility_s",
                                  "update_interval_s", "matcher", "status",
                                  "error"};
  // Metric columns already present among the config columns are written once.
  std::vector<std::size_t> keep;
  const auto metric_names = metrics_header();
  for (std::size_t k = 0; k < metric_names.size(); ++k) {
    if (std::find(header.begin(), header.end(), metric_names[k]) != header.end()) continue;
    keep.push_back(k);
  }
  for (std::size_t k : keep) header.push_back(metric_names[k]);
  write_csv_row(out, header);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    const ScenarioConfig& c = r.config;
    std::vector<std::string> row{std::to_string(i),
                                 std::to_string(c.seed),
                                 std::to_string(c.fleet_size),
                                 format_number(c.demand.scale),
                                 std::to_string(c.capacity),
                                 std::to_string(c.flexibility),
                                 std::to_string(c.update_interval),
                                 std::string(to_string(c.matcher)),
                                 r.metrics ? "ok" : "failed",
                                 r.error};
    if (r.metrics) {
      auto values = metrics_row(*r.metrics);
      for (std::size_t k : keep) row.push_back(std::move(values[k]));
    } else {
      row.insert(row.end(), keep.size(), "");
    }
    write_csv_row(out, row);
  }
}

Comparison run_comparison(const ScenarioConfig& config) {
  RoadNetwork net = load_scenario_network(config);
  ScenarioConfig gmo = config;
  gmo.matcher = MatcherKind::kGmoMatch;
  ScenarioConfig base = config;
  base.matcher = MatcherKind::kBaseline;
  return Comparison{compute_metrics(run_scenario(gmo, net)),
                    compute_metrics(run_scenario(base, net))};
}

void write_comparison_csv(std::ostream& out, const Comparison& cmp) {
  const std::vector<std::string> header{"metric", "gmomatch", "baseline", "delta"};
  write_csv_row(out, header);
  auto g = numeric_metrics(cmp.gmomatch);
  auto b = numeric_metrics(cmp.baseline);
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::optional<double> delta;
    if (g[i].second && b[i].second) delta = *g[i].second - *b[i].second;
    const std::vector<std::string> row{g[i].first, format_number(g[i].second),
                                       format_number(b[i].second),
                                       format_number(delta)};
    write_csv_row(out, row);
  }
}

}  // namespace ridematch
