#include "ridematch/vehicle_graph.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <unordered_map>

#include "ridematch/blossom.hpp"
#include "ridematch/scheduling.hpp"

namespace ridematch {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Vehicle* find_vehicle(std::span<Vehicle> fleet, VehicleId id) {
  for (Vehicle& v : fleet) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

}  // namespace

bool is_round_idle(const Vehicle& vehicle) {
  return vehicle.onboard.empty() && vehicle.scheduled == vehicle.assigned;
}

bool may_link(const Vehicle& donor, const Vehicle& recipient,
              const FeasibilityIndex& feasibility) {
  if (donor.id == recipient.id) return false;
  if (donor.assigned.empty() || recipient.assigned.empty()) return false;
  if (!is_round_idle(donor)) return false;
  if (donor.occupants() > recipient.occupants()) return false;
  if (static_cast<int>(donor.assigned.size()) > recipient.available_capacity()) {
    return false;
  }
  for (RequestId r : donor.assigned) {
    auto it = feasibility.find(r);
    if (it == feasibility.end()) continue;
    if (std::find(it->second.begin(), it->second.end(), recipient.id) !=
        it->second.end()) {
      return true;
    }
  }
  return false;
}

VehicleGraph build_vehicle_graph(const RoadNetwork& net, Seconds now,
                                 std::span<const Vehicle> fleet,
                                 const FeasibilityIndex& feasibility) {
  VehicleGraph graph;
  std::vector<const Vehicle*> assigned;
  for (const Vehicle& v : fleet) {
    if (v.assigned.empty()) continue;
    graph.nodes.push_back(v.id);
    assigned.push_back(&v);
  }
  for (const Vehicle* donor : assigned) {
    for (const Vehicle* recipient : assigned) {
      if (!may_link(*donor, *recipient, feasibility)) continue;
      InsertionResult merged = split_merge_cost(net, now, *donor, *recipient);
      if (!merged.feasible) continue;
      graph.edges.push_back({donor->id, recipient->id, merged.cost,
                             std::move(merged.tour), donor->tour,
                             recipient->tour});
    }
  }
  return graph;
}

VehicleMatching match_vehicles(const VehicleGraph& graph) {
  VehicleMatching matching;
  if (graph.edges.empty()) return matching;

  std::unordered_map<VehicleId, int> vertex;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    vertex.emplace(graph.nodes[i], static_cast<int>(i));
  }

  // Cheaper direction per unordered pair; on equal cost the smaller donor id.
  std::map<std::pair<int, int>, std::size_t> chosen;
  for (std::size_t k = 0; k < graph.edges.size(); ++k) {
    const VehicleEdge& e = graph.edges[k];
    int a = vertex.at(e.donor);
    int b = vertex.at(e.recipient);
    auto key = std::minmax(a, b);
    auto [it, inserted] = chosen.emplace(key, k);
    if (inserted) continue;
    const VehicleEdge& cur = graph.edges[it->second];
    if (e.cost < cur.cost || (e.cost == cur.cost && e.donor < cur.donor)) {
      it->second = k;
    }
  }

  Seconds max_cost = 0;
  for (const auto& [key, k] : chosen) {
    max_cost = std::max(max_cost, graph.edges[k].cost);
  }
  const std::int64_t offset = max_cost + 1;

  std::vector<WeightedEdge> edges;
  std::vector<std::size_t> origin;
  for (const auto& [key, k] : chosen) {
    edges.push_back({key.first, key.second, offset - graph.edges[k].cost});
    origin.push_back(k);
  }
  std::vector<int> mate = max_weight_matching(
      static_cast<int>(graph.nodes.size()), edges, /*max_cardinality=*/true);

  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (mate[edges[e].u] != edges[e].v) continue;
    const VehicleEdge& ve = graph.edges[origin[e]];
    matching.push_back({ve.donor, ve.recipient, origin[e]});
  }
  return matching;
}

ApplyResult apply_matching(const VehicleMatching& matching,
                           const VehicleGraph& graph,
                           std::span<Vehicle> fleet) {
  ApplyResult result;
  for (const VehiclePair& pair : matching) {
    Vehicle* donor = find_vehicle(fleet, pair.donor);
    Vehicle* recipient = find_vehicle(fleet, pair.recipient);
    const bool live = pair.edge < graph.edges.size() && donor && recipient &&
                      graph.edges[pair.edge].donor == pair.donor &&
                      graph.edges[pair.edge].recipient == pair.recipient;
    const VehicleEdge* edge = live ? &graph.edges[pair.edge] : nullptr;
    if (!edge || donor->tour != edge->donor_tour ||
        recipient->tour != edge->recipient_tour) {
      result.stale.push_back(pair);
      continue;
    }
    recipient->tour = edge->merged_tour;
    recipient->scheduled.insert(donor->scheduled.begin(),
                                donor->scheduled.end());
    recipient->assigned.insert(donor->assigned.begin(), donor->assigned.end());
    donor->tour.clear();
    donor->scheduled.clear();
    donor->assigned.clear();
    ++result.applied;
  }
  return result;
}

Step2Stats step2_loop(const RoadNetwork& net, Seconds now,
                      std::span<Vehicle> fleet,
                      const FeasibilityIndex& feasibility) {
  Step2Stats stats;
  stats.initial_assigned = static_cast<std::size_t>(std::count_if(
      fleet.begin(), fleet.end(),
      [](const Vehicle& v) { return !v.assigned.empty(); }));
  while (true) {
    auto t0 = Clock::now();
    VehicleGraph graph = build_vehicle_graph(net, now, fleet, feasibility);
    stats.cost_seconds += seconds_since(t0);
    if (graph.edges.empty()) break;

    t0 = Clock::now();
    VehicleMatching matching = match_vehicles(graph);
    stats.solve_seconds += seconds_since(t0);
    if (matching.empty()) break;

    ApplyResult applied = apply_matching(matching, graph, fleet);
    if (applied.applied == 0) break;
    stats.merges += applied.applied;
    ++stats.iterations;
  }
  return stats;
}

}  // namespace ridematch
