#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ridematch/assignment.hpp"
#include "ridematch/model.hpp"
#include "ridematch/network.hpp"

namespace ridematch {

/// Directed edge: the donor's round assignments can move into the
/// recipient's tour, producing `merged_tour` at cost `cost`.
struct VehicleEdge {
  VehicleId donor;
  VehicleId recipient;
  Seconds cost = 0;
  Tour merged_tour;
  // Tours the edge was priced against; used to detect stale edges.
  Tour donor_tour;
  Tour recipient_tour;
};

struct VehicleGraph {
  /// Assigned vehicles (non-empty round assignments), in fleet order.
  std::vector<VehicleId> nodes;
  std::vector<VehicleEdge> edges;
};

struct VehiclePair {
  VehicleId donor;
  VehicleId recipient;
  std::size_t edge = 0;
};

using VehicleMatching = std::vector<VehiclePair>;

/// True when every committed passenger of the vehicle was assigned during
/// the current round, i.e. it was idle before the round began. Only such
/// vehicles may hand their requests to another vehicle.
bool is_round_idle(const Vehicle& vehicle);

/// Whether donor -> recipient passes the structural link rules: the donor
/// is round-idle, has no more occupants than the recipient, its round
/// assignments fit in the recipient's free seats, and the recipient is a
/// feasible vehicle of at least one of those requests.
bool may_link(const Vehicle& donor, const Vehicle& recipient,
              const FeasibilityIndex& feasibility);

/// Builds the vehicle graph over the fleet's assigned vehicles, pricing
/// every admissible ordered pair with split_merge_cost.
VehicleGraph build_vehicle_graph(const RoadNetwork& net, Seconds now,
                                 std::span<const Vehicle> fleet,
                                 const FeasibilityIndex& feasibility);

/// Pairs vehicles to maximise the number of merges, then minimise the total
/// merged cost. Each unordered pair keeps its cheaper direction (smaller
/// donor id on ties); weights are K - cost with K = 1 + max edge cost.
VehicleMatching match_vehicles(const VehicleGraph& graph);

struct ApplyResult {
  std::size_t applied = 0;
  /// Pairs whose vehicles changed since the edge was priced; not applied.
  VehicleMatching stale;
};

/// Recipients adopt the merged tour and absorb the donor's scheduled and
/// round-assigned requests; donors are left empty and idle in place.
ApplyResult apply_matching(const VehicleMatching& matching,
                           const VehicleGraph& graph,
                           std::span<Vehicle> fleet);

struct Step2Stats {
  /// Assigned vehicles when the loop started.
  std::size_t initial_assigned = 0;
  /// Rounds in which at least one merge was applied.
  std::size_t iterations = 0;
  std::size_t merges = 0;
  double cost_seconds = 0.0;
  double solve_seconds = 0.0;
};

/// Repeats build / match / apply until the vehicle graph has no edges.
Step2Stats step2_loop(const RoadNetwork& net, Seconds now,
                      std::span<Vehicle> fleet,
                      const FeasibilityIndex& feasibility);

}  // namespace ridematch
