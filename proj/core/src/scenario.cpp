#include "ridematch/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "json_util.hpp"

namespace ridematch {

using nlohmann::json;

namespace {

constexpr const char* kWhat = "scenario config";

GridSpec parse_grid(const json& j) {
  detail::require_object(j, "network.grid");
  detail::reject_unknown(j, "network.grid",
                         {"rows", "cols", "link_length_m", "link_travel_time_s"});
  GridSpec g;
  g.rows = static_cast<int>(detail::require_int(j, "rows", "network.grid"));
  g.cols = static_cast<int>(detail::require_int(j, "cols", "network.grid"));
  g.link_length_m = detail::require_number(j, "link_length_m", "network.grid");
  g.link_travel_time = detail::require_int(j, "link_travel_time_s", "network.grid");
  return g;
}

DemandModel parse_demand(const json& j) {
  detail::require_object(j, "demand");
  DemandModel d;
  const std::string type = detail::require_string(j, "type", "demand");
  if (type == "uniform") {
    detail::reject_unknown(j, "demand", {"type", "rate_per_hour", "scale"});
    d.kind = DemandKind::kUniform;
    d.rate_per_hour = detail::require_number(j, "rate_per_hour", "demand");
  } else if (type == "od_rates") {
    detail::reject_unknown(j, "demand", {"type", "rates", "scale"});
    d.kind = DemandKind::kOdRates;
    for (const auto& item : detail::require_array(j, "rates", "demand")) {
      detail::require_object(item, "demand rate");
      detail::reject_unknown(item, "demand rate",
                             {"origin", "destination", "per_hour"});
      d.od_rates.push_back(
          {NodeId{detail::require_int(item, "origin", "demand rate")},
           NodeId{detail::require_int(item, "destination", "demand rate")},
           detail::require_number(item, "per_hour", "demand rate")});
    }
  } else if (type == "file") {
    detail::reject_unknown(j, "demand", {"type", "path"});
    d.kind = DemandKind::kFile;
    d.requests_file = detail::require_string(j, "path", "demand");
  } else {
    throw ParseError("demand: unknown type '" + type + "'");
  }
  if (j.contains("scale")) d.scale = detail::require_number(j, "scale", "demand");
  return d;
}

json grid_json(const GridSpec& g) {
  return {{"rows", g.rows},
          {"cols", g.cols},
          {"link_length_m", g.link_length_m},
          {"link_travel_time_s", g.link_travel_time}};
}

}  // namespace

std::string resolve_path(const std::string& base_dir, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

ScenarioConfig parse_config(const std::string& document,
                            const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(kWhat) + ": " + e.what());
  }
  detail::require_object(doc, kWhat);
  if (doc.contains("manifest_version")) {
    doc = detail::require_field(doc, "config", "manifest");
    detail::require_object(doc, kWhat);
  }
  detail::reject_unknown(doc, kWhat,
                         {"network", "demand", "loading_period_s", "fleet_size",
                          "capacity", "flexibility_s", "update_interval_s",
                          "matcher", "seed"});

  ScenarioConfig c;
  c.base_dir = base_dir;

  const json& net = detail::require_field(doc, "network", kWhat);
  detail::require_object(net, "network");
  detail::reject_unknown(net, "network", {"file", "grid"});
  if (net.contains("file") == net.contains("grid")) {
    throw ParseError("network: exactly one of 'file' or 'grid' is required");
  }
  if (net.contains("file")) {
    c.network.file = detail::require_string(net, "file", "network");
  } else {
    c.network.grid = parse_grid(net.at("grid"));
  }

  c.demand = parse_demand(detail::require_field(doc, "demand", kWhat));
  c.loading_period = detail::require_int(doc, "loading_period_s", kWhat);
  c.fleet_size = static_cast<int>(detail::require_int(doc, "fleet_size", kWhat));
  c.capacity = static_cast<int>(detail::require_int(doc, "capacity", kWhat));
  c.flexibility = detail::require_int(doc, "flexibility_s", kWhat);
  c.update_interval = detail::require_int(doc, "update_interval_s", kWhat);
  const std::string matcher = detail::require_string(doc, "matcher", kWhat);
  auto kind = parse_matcher(matcher);
  if (!kind) throw ParseError("unknown matcher '" + matcher + "'");
  c.matcher = *kind;
  const json& seed = detail::require_field(doc, "seed", kWhat);
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
    throw ParseError("scenario config: field 'seed' must be an integer");
  }
  if (seed.is_number_integer() && seed.get<std::int64_t>() < 0) {
    throw ParseError("scenario config: field 'seed' must be non-negative");
  }
  c.seed = seed.get<std::uint64_t>();
  validate_config(c);
  return c;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string dir = std::filesystem::path(path).parent_path().string();
  return parse_config(buffer.str(), dir.empty() ? "." : dir);
}

std::string dump_config(const ScenarioConfig& c) {
  json doc;
  if (c.network.file) {
    doc["network"] = {{"file", *c.network.file}};
  } else if (c.network.grid) {
    doc["network"] = {{"grid", grid_json(*c.network.grid)}};
  }
  json demand;
  switch (c.demand.kind) {
    case DemandKind::kUniform:
      demand = {{"type", "uniform"},
                {"rate_per_hour", c.demand.rate_per_hour},
                {"scale", c.demand.scale}};
      break;
    case DemandKind::kOdRates: {
      json rates = json::array();
      for (const OdRate& r : c.demand.od_rates) {
        rates.push_back({{"origin", r.origin.value},
                         {"destination", r.destination.value},
                         {"per_hour", r.per_hour}});
      }
      demand = {{"type", "od_rates"}, {"rates", rates}, {"scale", c.demand.scale}};
      break;
    }
    case DemandKind::kFile:
      demand = {{"type", "file"}, {"path", c.demand.requests_file.value_or("")}};
      break;
  }
  doc["demand"] = demand;
  doc["loading_period_s"] = c.loading_period;
  doc["fleet_size"] = c.fleet_size;
  doc["capacity"] = c.capacity;
  doc["flexibility_s"] = c.flexibility;
  doc["update_interval_s"] = c.update_interval;
  doc["matcher"] = std::string(to_string(c.matcher));
  doc["seed"] = c.seed;
  return doc.dump(2);
}

void validate_config(const ScenarioConfig& c) {
  auto fail = [](const std::string& msg) { throw ValidationError(msg); };
  if (!c.network.file && !c.network.grid) fail("network source missing");
  if (c.network.grid) {
    const GridSpec& g = *c.network.grid;
    if (g.rows < 1 || g.cols < 1) fail("grid rows and cols must be >= 1");
    if (!(g.link_length_m > 0.0)) fail("grid link length must be > 0");
    if (g.link_travel_time <= 0) fail("grid link travel time must be > 0");
  }
  if (c.update_interval <= 0) fail("update_interval_s must be > 0");
  if (c.capacity < 1) fail("capacity must be >= 1");
  if (c.flexibility < 0) fail("flexibility_s must be >= 0");
  if (c.fleet_size < 1) fail("fleet_size must be >= 1");
  if (c.loading_period < 0) fail("loading_period_s must be >= 0");
  if (!(c.demand.scale >= 0.0)) fail("demand scale must be >= 0");
  if (c.demand.kind == DemandKind::kUniform && !(c.demand.rate_per_hour >= 0.0)) {
    fail("demand rate_per_hour must be >= 0");
  }
  for (const OdRate& r : c.demand.od_rates) {
    if (!(r.per_hour >= 0.0)) fail("demand rates must be >= 0");
    if (r.origin == r.destination) fail("demand rate with origin == destination");
  }
  if (c.demand.kind == DemandKind::kFile && !c.demand.requests_file) {
    fail("file demand needs a path");
  }
}

RoadNetwork load_scenario_network(const ScenarioConfig& c) {
  validate_config(c);
  RoadNetwork net = c.network.file
                        ? load_network_file(resolve_path(c.base_dir, *c.network.file))
                        : make_grid_network(c.network.grid->rows,
                                            c.network.grid->cols,
                                            c.network.grid->link_length_m,
                                            c.network.grid->link_travel_time);
  for (const OdRate& r : c.demand.od_rates) {
    if (!net.contains(r.origin) || !net.contains(r.destination)) {
      throw ValidationError("demand rate references a node not in the network");
    }
    if (r.per_hour > 0.0 && !net.shortest_travel_time(r.origin, r.destination)) {
      throw ValidationError("demand rate on unreachable OD pair " +
                            std::to_string(r.origin.value) + "->" +
                            std::to_string(r.destination.value));
    }
  }
  return net;
}

}  // namespace ridematch
