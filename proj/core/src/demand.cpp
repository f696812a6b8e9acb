#include "ridematch/demand.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <tuple>

#include "ridematch/csv.hpp"

namespace ridematch {

double Rng::exponential(double rate) {
  return -std::log1p(-uniform()) / rate;
}

std::size_t Rng::categorical(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  double x = uniform() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (x < weights[i]) return i;
    x -= weights[i];
  }
  // Rounding can leave x just above the last bucket.
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0.0) return i;
  }
  return 0;
}

namespace {

struct Draft {
  Seconds time;
  NodeId origin;
  NodeId destination;
};

void poisson_arrivals(const OdRate& od, Seconds horizon, Rng& rng,
                      std::vector<Draft>& out) {
  if (!(od.per_hour > 0.0) || horizon <= 0) return;
  const double per_second = od.per_hour / 3600.0;
  double t = 0.0;
  while (true) {
    t += rng.exponential(per_second);
    if (t >= static_cast<double>(horizon)) break;
    out.push_back({static_cast<Seconds>(std::floor(t)), od.origin, od.destination});
  }
}

}  // namespace

std::vector<Request> generate_demand(const ScenarioConfig& config,
                                     const RoadNetwork& net, Rng& rng) {
  std::vector<OdRate> rates;
  if (config.demand.kind == DemandKind::kUniform) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId o : net.nodes()) {
      for (NodeId d : net.nodes()) {
        if (o != d && net.shortest_travel_time(o, d)) pairs.emplace_back(o, d);
      }
    }
    if (!pairs.empty()) {
      const double each = config.demand.rate_per_hour * config.demand.scale /
                          static_cast<double>(pairs.size());
      for (auto [o, d] : pairs) rates.push_back({o, d, each});
    }
  } else if (config.demand.kind == DemandKind::kOdRates) {
    for (OdRate r : config.demand.od_rates) {
      r.per_hour *= config.demand.scale;
      rates.push_back(r);
    }
  }

  std::vector<Draft> drafts;
  for (const OdRate& od : rates) {
    poisson_arrivals(od, config.loading_period, rng, drafts);
  }
  std::stable_sort(drafts.begin(), drafts.end(), [](const Draft& a, const Draft& b) {
    return std::tie(a.time, a.origin, a.destination) <
           std::tie(b.time, b.origin, b.destination);
  });

  std::vector<Request> out;
  out.reserve(drafts.size());
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    out.push_back(make_request_with_flexibility(
        RequestId{static_cast<std::int64_t>(i)}, drafts[i].time,
        drafts[i].origin, drafts[i].destination, config.flexibility, net));
  }
  return out;
}

std::vector<Request> load_requests_file(const std::string& path,
                                        const RoadNetwork& net) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open requests file: " + path);
  auto rows = read_csv(in);
  const std::vector<std::string> header{"id", "t_r", "origin", "destination", "l_r"};
  if (rows.empty() || rows.front() != header) {
    throw ParseError(path + ": expected header id,t_r,origin,destination,l_r");
  }
  std::vector<Request> out;
  std::set<RequestId> seen;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != header.size()) {
      throw ParseError(path + ": row " + std::to_string(i + 1) +
                       " has the wrong number of fields");
    }
    auto num = [&](std::size_t col) -> std::int64_t {
      try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(row[col], &used);
        if (used != row[col].size()) throw std::invalid_argument("trailing");
        return v;
      } catch (const std::exception&) {
        throw ParseError(path + ": row " + std::to_string(i + 1) + ": '" +
                         row[col] + "' is not an integer");
      }
    };
    RequestId id{num(0)};
    if (!seen.insert(id).second) {
      throw ParseError(path + ": duplicate request id " + row[0]);
    }
    NodeId origin{num(2)};
    NodeId destination{num(3)};
    if (!net.contains(origin) || !net.contains(destination)) {
      throw ValidationError(path + ": request " + row[0] +
                            " references an unknown node");
    }
    out.push_back(make_request(id, num(1), origin, destination, num(4), net));
  }
  std::stable_sort(out.begin(), out.end(), [](const Request& a, const Request& b) {
    return std::tie(a.request_time, a.id) < std::tie(b.request_time, b.id);
  });
  return out;
}

std::vector<Request> scenario_demand(const ScenarioConfig& config,
                                     const RoadNetwork& net, Rng& rng) {
  if (config.demand.kind == DemandKind::kFile) {
    return load_requests_file(
        resolve_path(config.base_dir, *config.demand.requests_file), net);
  }
  return generate_demand(config, net, rng);
}

std::vector<Vehicle> initialize_fleet(const ScenarioConfig& config,
                                      const RoadNetwork& net,
                                      std::span<const Request> demand,
                                      Rng& rng) {
  std::map<NodeId, double> counts;
  for (NodeId n : net.nodes()) counts[n] = 0.0;
  for (const Request& r : demand) counts[r.origin] += 1.0;

  std::vector<NodeId> nodes;
  std::vector<double> weights;
  double total = 0.0;
  for (const auto& [node, count] : counts) {
    nodes.push_back(node);
    weights.push_back(count);
    total += count;
  }
  if (total == 0.0) std::fill(weights.begin(), weights.end(), 1.0);

  std::vector<Vehicle> fleet;
  for (int i = 0; i < config.fleet_size; ++i) {
    Vehicle v;
    v.id = VehicleId{i};
    v.capacity = config.capacity;
    v.location = nodes[rng.categorical(weights)];
    fleet.push_back(std::move(v));
  }
  return fleet;
}

}  // namespace ridematch
