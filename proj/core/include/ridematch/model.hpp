#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "ridematch/network.hpp"
#include "ridematch/types.hpp"

namespace ridematch {

enum class RequestStatus { kPending, kAssigned, kOnboard, kServed, kExpired };

std::string_view to_string(RequestStatus status);

/// A single-passenger ride request. Request time equals earliest departure.
struct Request {
  RequestId id;
  Seconds request_time = 0;
  Seconds earliest_departure = 0;
  Seconds latest_arrival = 0;
  NodeId origin;
  NodeId destination;
  /// Slack before the pickup deadline: l - e - H(O, D).
  Seconds flexibility = 0;
  /// Pickup deadline: e + flexibility.
  Seconds latest_departure = 0;
  /// Direct shortest travel time H(O, D).
  Seconds direct_time = 0;
  RequestStatus status = RequestStatus::kPending;
};

struct Windows {
  Seconds flexibility = 0;
  Seconds latest_departure = 0;
};

/// Flexibility and pickup deadline from the earliest departure and latest
/// arrival. Returns nullopt when the direct trip cannot meet the latest
/// arrival. Throws ValidationError if the destination is unreachable.
std::optional<Windows> derive_windows(Seconds earliest_departure,
                                      Seconds latest_arrival, NodeId origin,
                                      NodeId destination,
                                      const RoadNetwork& net);

/// Builds a request from its latest arrival (requests-file form). Throws
/// ValidationError on O == D, unreachable pairs and negative flexibility.
Request make_request(RequestId id, Seconds request_time, NodeId origin,
                     NodeId destination, Seconds latest_arrival,
                     const RoadNetwork& net);

/// Builds a request from a fixed flexibility: l = e + f + H(O, D).
Request make_request_with_flexibility(RequestId id, Seconds request_time,
                                      NodeId origin, NodeId destination,
                                      Seconds flexibility,
                                      const RoadNetwork& net);

/// Moves `request` to `next` if the transition is legal
/// (pending -> assigned -> onboard -> served, pending -> expired).
/// Throws Error otherwise.
void transition(Request& request, RequestStatus next);

enum class StopKind { kPickup, kDropoff };

/// One visit in a vehicle tour. `deadline` is the request's pickup deadline
/// for pickups and its latest arrival for dropoffs.
struct Stop {
  StopKind kind = StopKind::kPickup;
  RequestId request;
  NodeId node;
  Seconds deadline = 0;

  friend bool operator==(const Stop&, const Stop&) = default;
};

using Tour = std::vector<Stop>;

Stop pickup_stop(const Request& request);
Stop dropoff_stop(const Request& request);

/// onboard_count + pickups - dropoffs over the first `prefix` stops.
int occupancy_at(const Tour& tour, int onboard_count, std::size_t prefix);

/// Each request appears at most once per stop kind, and a pickup is always
/// followed (not preceded) by its dropoff when both are present.
bool has_valid_precedence(const Tour& tour);

/// Distinct requests with at least one stop in the tour.
std::size_t requests_in_tour(const Tour& tour);

enum class VehicleState { kIdle, kEnroute };

struct Vehicle {
  VehicleId id;
  int capacity = 1;
  /// The node the vehicle is at, or the next node it will reach when moving.
  NodeId location;
  /// Time at which the vehicle is (or will be) at `location`.
  Seconds available_at = 0;
  Tour tour;
  std::set<RequestId> onboard;
  /// Assigned but not yet picked up.
  std::set<RequestId> scheduled;
  /// Requests gained during the current matching round (R_v).
  std::set<RequestId> assigned;

  VehicleState state() const {
    return tour.empty() ? VehicleState::kIdle : VehicleState::kEnroute;
  }
  int occupants() const {
    return static_cast<int>(onboard.size() + scheduled.size());
  }
  int available_capacity() const { return capacity - occupants(); }
  /// Time the vehicle can leave `location` when planning at time `now`.
  Seconds departure_time(Seconds now) const {
    return available_at > now ? available_at : now;
  }
};

}  // namespace ridematch
