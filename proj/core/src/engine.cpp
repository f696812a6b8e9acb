#include "ridematch/engine.hpp"

#include <chrono>
#include <set>
#include <unordered_map>

#include "ridematch/assignment.hpp"

namespace ridematch {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

UpdateOutcome match_requests(const RoadNetwork& net, Seconds now,
                             std::span<const Request> pending,
                             std::span<Vehicle> fleet, bool combine) {
  UpdateOutcome outcome;
  std::vector<Request> remaining;
  for (const Request& r : pending) {
    if (now > r.latest_departure) {
      outcome.expired.push_back(r.id);
    } else {
      remaining.push_back(r);
    }
  }
  for (Vehicle& v : fleet) v.assigned.clear();

  std::unordered_map<VehicleId, Vehicle*> by_id;
  for (Vehicle& v : fleet) by_id.emplace(v.id, &v);

  while (!remaining.empty()) {
    for (Vehicle& v : fleet) v.assigned.clear();

    auto t0 = Clock::now();
    FeasibilityIndex feasibility;
    BipartiteGraph graph =
        build_bipartite(net, now, remaining, fleet, &feasibility);
    outcome.cost_calculation_seconds += seconds_since(t0);
    if (graph.edges.empty()) break;

    t0 = Clock::now();
    AssignmentSolution solution = solve_assignment(graph);
    outcome.solution_seconds += seconds_since(t0);
    if (solution.matches.empty()) break;
    ++outcome.iterations;

    std::set<RequestId> matched;
    for (const Match& m : solution.matches) {
      Vehicle& v = *by_id.at(m.vehicle);
      v.tour = graph.edges[m.edge].tour;
      v.scheduled.insert(m.request);
      v.assigned.insert(m.request);
      matched.insert(m.request);
    }

    if (combine) {
      Step2Stats stats = step2_loop(net, now, fleet, feasibility);
      outcome.cost_calculation_seconds += stats.cost_seconds;
      outcome.solution_seconds += stats.solve_seconds;
      outcome.step2.push_back(stats);
    }

    // Merging may have moved requests, so read the final holder off the fleet.
    for (const Vehicle& v : fleet) {
      for (RequestId r : v.assigned) {
        if (matched.contains(r)) outcome.finalized.push_back({r, v.id});
      }
    }
    std::erase_if(remaining,
                  [&](const Request& r) { return matched.contains(r.id); });

    if (!combine) break;
  }
  for (Vehicle& v : fleet) v.assigned.clear();
  for (const Request& r : remaining) outcome.deferred.push_back(r.id);
  return outcome;
}

}  // namespace

std::string_view to_string(MatcherKind kind) {
  return kind == MatcherKind::kGmoMatch ? "gmomatch" : "baseline";
}

std::optional<MatcherKind> parse_matcher(std::string_view name) {
  if (name == "gmomatch") return MatcherKind::kGmoMatch;
  if (name == "baseline") return MatcherKind::kBaseline;
  return std::nullopt;
}

UpdateOutcome gmomatch_update(const RoadNetwork& net, Seconds now,
                              std::span<const Request> pending,
                              std::span<Vehicle> fleet) {
  return match_requests(net, now, pending, fleet, /*combine=*/true);
}

UpdateOutcome baseline_update(const RoadNetwork& net, Seconds now,
                              std::span<const Request> pending,
                              std::span<Vehicle> fleet) {
  return match_requests(net, now, pending, fleet, /*combine=*/false);
}

UpdateOutcome run_update(MatcherKind kind, const RoadNetwork& net,
                         Seconds now, std::span<const Request> pending,
                         std::span<Vehicle> fleet) {
  return kind == MatcherKind::kGmoMatch
             ? gmomatch_update(net, now, pending, fleet)
             : baseline_update(net, now, pending, fleet);
}

}  // namespace ridematch
