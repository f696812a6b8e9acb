#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ridematch/model.hpp"
#include "ridematch/network.hpp"
#include "ridematch/vehicle_graph.hpp"

namespace ridematch {

enum class MatcherKind { kGmoMatch, kBaseline };

std::string_view to_string(MatcherKind kind);
std::optional<MatcherKind> parse_matcher(std::string_view name);

struct Assignment {
  RequestId request;
  VehicleId vehicle;
};

struct UpdateOutcome {
  std::vector<Assignment> finalized;
  std::vector<RequestId> deferred;
  std::vector<RequestId> expired;
  /// Main-loop iterations that assigned at least one request.
  int iterations = 0;
  /// One entry per main iteration (empty for the baseline).
  std::vector<Step2Stats> step2;
  /// Graph building and insertion pricing, wall clock.
  double cost_calculation_seconds = 0.0;
  /// Assignment and matching solves, wall clock.
  double solution_seconds = 0.0;
};

/// Two-step many-to-one matching at update time `now`.
///
/// Expires requests whose pickup deadline has passed, then alternates a
/// one-to-one request/vehicle assignment with vehicle merging until no
/// request is left or no request/vehicle link exists. Matched tours are
/// committed to `fleet`; unmatched live requests are deferred.
UpdateOutcome gmomatch_update(const RoadNetwork& net, Seconds now,
                              std::span<const Request> pending,
                              std::span<Vehicle> fleet);

/// One-to-one baseline: a single assignment solve, no merging, so each
/// vehicle gains at most one request per update.
UpdateOutcome baseline_update(const RoadNetwork& net, Seconds now,
                              std::span<const Request> pending,
                              std::span<Vehicle> fleet);

UpdateOutcome run_update(MatcherKind kind, const RoadNetwork& net,
                         Seconds now, std::span<const Request> pending,
                         std::span<Vehicle> fleet);

}  // namespace ridematch
