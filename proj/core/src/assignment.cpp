#include "ridematch/assignment.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "ridematch/hungarian.hpp"

namespace ridematch {

std::vector<VehicleId> feasible_vehicles(const RoadNetwork& net, Seconds now,
                                         const Request& request,
                                         std::span<const Vehicle> fleet) {
  std::vector<VehicleId> out;
  for (const Vehicle& v : fleet) {
    if (v.available_capacity() < 1) continue;
    auto reach = net.shortest_travel_time(v.location, request.origin);
    if (!reach) continue;
    Seconds to_origin = (v.departure_time(now) - now) + *reach;
    if (to_origin <= request.flexibility) out.push_back(v.id);
  }
  return out;
}

BipartiteGraph build_bipartite(const RoadNetwork& net, Seconds now,
                               std::span<const Request> requests,
                               std::span<const Vehicle> fleet,
                               FeasibilityIndex* index) {
  BipartiteGraph graph;
  std::unordered_map<VehicleId, const Vehicle*> by_id;
  for (const Vehicle& v : fleet) {
    graph.vehicles.push_back(v.id);
    by_id.emplace(v.id, &v);
  }
  for (const Request& r : requests) {
    graph.requests.push_back(r.id);
    auto candidates = feasible_vehicles(net, now, r, fleet);
    for (VehicleId vid : candidates) {
      InsertionResult ins = path_cost(net, now, *by_id.at(vid), r);
      if (ins.feasible) {
        graph.edges.push_back({r.id, vid, ins.cost, std::move(ins.tour)});
      }
    }
    if (index) (*index)[r.id] = std::move(candidates);
  }
  return graph;
}

AssignmentSolution solve_assignment(const BipartiteGraph& graph) {
  AssignmentSolution solution;
  if (graph.edges.empty()) return solution;

  // Only requests and vehicles touching an edge can ever be matched.
  std::unordered_set<RequestId> edge_requests;
  std::unordered_set<VehicleId> edge_vehicles;
  for (const BipartiteEdge& e : graph.edges) {
    edge_requests.insert(e.request);
    edge_vehicles.insert(e.vehicle);
  }
  std::vector<RequestId> rows;
  std::vector<VehicleId> cols;
  std::unordered_map<RequestId, std::size_t> row_of;
  std::unordered_map<VehicleId, std::size_t> col_of;
  for (RequestId r : graph.requests) {
    if (edge_requests.contains(r) && row_of.emplace(r, rows.size()).second) {
      rows.push_back(r);
    }
  }
  for (VehicleId v : graph.vehicles) {
    if (edge_vehicles.contains(v) && col_of.emplace(v, cols.size()).second) {
      cols.push_back(v);
    }
  }

  std::int64_t prohibitive = 2;
  for (const BipartiteEdge& e : graph.edges) prohibitive += e.cost;

  const std::size_t n = std::max(rows.size(), cols.size());
  CostMatrix cost(n, prohibitive);
  constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);
  std::vector<std::size_t> edge_at(n * n, kNoEdge);
  for (std::size_t k = 0; k < graph.edges.size(); ++k) {
    const BipartiteEdge& e = graph.edges[k];
    auto r = row_of.find(e.request);
    auto c = col_of.find(e.vehicle);
    if (r == row_of.end() || c == col_of.end()) continue;
    std::size_t cell = r->second * n + c->second;
    if (edge_at[cell] == kNoEdge || e.cost < graph.edges[edge_at[cell]].cost) {
      edge_at[cell] = k;
      cost(r->second, c->second) = e.cost;
    }
  }

  LapSolution lap = solve_lap(cost);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t c = lap.row_to_col[r];
    if (c >= cols.size()) continue;
    std::size_t k = edge_at[r * n + c];
    if (k == kNoEdge) continue;
    solution.matches.push_back({rows[r], cols[c], k});
    solution.total_cost += graph.edges[k].cost;
  }
  return solution;
}

}  // namespace ridematch
