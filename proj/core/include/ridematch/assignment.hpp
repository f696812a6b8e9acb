#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ridematch/model.hpp"
#include "ridematch/network.hpp"
#include "ridematch/scheduling.hpp"

namespace ridematch {

/// Candidate vehicles per request (V_r^f), keyed by request id.
using FeasibilityIndex = std::map<RequestId, std::vector<VehicleId>>;

struct BipartiteEdge {
  RequestId request;
  VehicleId vehicle;
  Seconds cost = 0;
  Tour tour;
};

struct BipartiteGraph {
  std::vector<RequestId> requests;
  std::vector<VehicleId> vehicles;
  std::vector<BipartiteEdge> edges;
};

struct Match {
  RequestId request;
  VehicleId vehicle;
  /// Index of the realising edge in BipartiteGraph::edges.
  std::size_t edge = 0;
};

struct AssignmentSolution {
  std::vector<Match> matches;
  Seconds total_cost = 0;
};

/// Vehicles with a free seat whose travel time to the request's origin,
/// counted from `now`, does not exceed the request's flexibility. Vehicles
/// outside this radius cannot meet the pickup deadline as first stop.
std::vector<VehicleId> feasible_vehicles(const RoadNetwork& net, Seconds now,
                                         const Request& request,
                                         std::span<const Vehicle> fleet);

/// Request-vehicle graph: one edge per feasible insertion among each
/// request's feasible vehicles. When `index` is given it receives V_r^f for
/// every request (possibly empty).
BipartiteGraph build_bipartite(const RoadNetwork& net, Seconds now,
                               std::span<const Request> requests,
                               std::span<const Vehicle> fleet,
                               FeasibilityIndex* index = nullptr);

/// Minimum-cost maximum-cardinality one-to-one assignment. The sparse
/// rectangular graph is padded to a square matrix with a cost larger than
/// the sum of all edge costs; pairs landing on padded cells are dropped.
AssignmentSolution solve_assignment(const BipartiteGraph& graph);

}  // namespace ridematch
