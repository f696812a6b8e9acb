#pragma once

#include <vector>

#include "ridematch/model.hpp"
#include "ridematch/network.hpp"

namespace ridematch::testing {

inline constexpr NodeId kA{0};
inline constexpr NodeId kB{1};
inline constexpr NodeId kC{2};

// A -> B -> C, 60 s and 500 m per link, plus the reverse links.
inline RoadNetwork line_network() {
  return RoadNetwork({kA, kB, kC}, {{kA, kB, 500.0, 60},
                                    {kB, kC, 500.0, 60},
                                    {kB, kA, 500.0, 60},
                                    {kC, kB, 500.0, 60}});
}

inline Vehicle idle_vehicle(std::int64_t id, NodeId at, int capacity = 4) {
  Vehicle v;
  v.id = VehicleId{id};
  v.capacity = capacity;
  v.location = at;
  return v;
}

// Commits `r` to `v` the way the engine does after a match.
inline void schedule(Vehicle& v, const Request& r, Tour tour) {
  v.tour = std::move(tour);
  v.scheduled.insert(r.id);
}

}  // namespace ridematch::testing

namespace ridematch::testing {

// Requests r1..r4 with origins 101..104 (all bound for 200) and vehicles
// v1..v7 at nodes 1..7. A vehicle is 10 s from an origin exactly when it
// appears in that request's feasible set, and cannot reach it otherwise:
//   V1 = {v2, v3, v5, v7}  V2 = {v1, v3, v4, v6}  V3 = {v2, v5}  V4 = {v6, v7}
struct FeasibleSetsCase {
  RoadNetwork net;
  std::vector<Request> requests;
  std::vector<Vehicle> fleet;
};

inline FeasibleSetsCase feasible_sets_case() {
  const std::vector<std::vector<int>> sets{
      {2, 3, 5, 7}, {1, 3, 4, 6}, {2, 5}, {6, 7}};
  std::vector<NodeId> nodes{NodeId{200}};
  std::vector<Link> links;
  for (int v = 1; v <= 7; ++v) nodes.push_back(NodeId{v});
  for (int r = 1; r <= 4; ++r) {
    NodeId origin{100 + r};
    nodes.push_back(origin);
    links.push_back({origin, NodeId{200}, 100.0, 10});
    for (int v : sets[static_cast<std::size_t>(r - 1)]) {
      links.push_back({NodeId{v}, origin, 100.0, 10});
    }
  }
  FeasibleSetsCase out{RoadNetwork(nodes, links), {}, {}};
  for (int r = 1; r <= 4; ++r) {
    out.requests.push_back(make_request_with_flexibility(
        RequestId{r}, 0, NodeId{100 + r}, NodeId{200}, 100, out.net));
  }
  for (int v = 1; v <= 7; ++v) out.fleet.push_back(idle_vehicle(v, NodeId{v}));
  return out;
}

}  // namespace ridematch::testing
