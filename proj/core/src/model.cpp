#include "ridematch/model.hpp"

#include <string>
#include <unordered_map>

namespace ridematch {

std::string_view to_string(RequestStatus status) {
  switch (status) {
    case RequestStatus::kPending: return "pending";
    case RequestStatus::kAssigned: return "assigned";
    case RequestStatus::kOnboard: return "onboard";
    case RequestStatus::kServed: return "served";
    case RequestStatus::kExpired: return "expired";
  }
  return "unknown";
}

std::optional<Windows> derive_windows(Seconds earliest_departure,
                                      Seconds latest_arrival, NodeId origin,
                                      NodeId destination,
                                      const RoadNetwork& net) {
  auto direct = net.shortest_travel_time(origin, destination);
  if (!direct) {
    throw ValidationError("destination " + std::to_string(destination.value) +
                          " unreachable from origin " +
                          std::to_string(origin.value));
  }
  Seconds flexibility = latest_arrival - earliest_departure - *direct;
  if (flexibility < 0) return std::nullopt;
  return Windows{flexibility, earliest_departure + flexibility};
}

Request make_request(RequestId id, Seconds request_time, NodeId origin,
                     NodeId destination, Seconds latest_arrival,
                     const RoadNetwork& net) {
  if (origin == destination) {
    throw ValidationError("request " + std::to_string(id.value) +
                          ": origin equals destination");
  }
  auto windows =
      derive_windows(request_time, latest_arrival, origin, destination, net);
  if (!windows) {
    throw ValidationError("request " + std::to_string(id.value) +
                          ": latest arrival earlier than direct trip allows");
  }
  Request r;
  r.id = id;
  r.request_time = request_time;
  r.earliest_departure = request_time;
  r.latest_arrival = latest_arrival;
  r.origin = origin;
  r.destination = destination;
  r.flexibility = windows->flexibility;
  r.latest_departure = windows->latest_departure;
  r.direct_time = latest_arrival - windows->latest_departure;
  return r;
}

Request make_request_with_flexibility(RequestId id, Seconds request_time,
                                      NodeId origin, NodeId destination,
                                      Seconds flexibility,
                                      const RoadNetwork& net) {
  if (flexibility < 0) {
    throw ValidationError("request " + std::to_string(id.value) +
                          ": negative flexibility");
  }
  auto direct = net.shortest_travel_time(origin, destination);
  if (!direct) {
    throw ValidationError("request " + std::to_string(id.value) +
                          ": destination unreachable");
  }
  return make_request(id, request_time, origin, destination,
                      request_time + flexibility + *direct, net);
}

void transition(Request& request, RequestStatus next) {
  auto legal = [](RequestStatus from, RequestStatus to) {
    switch (from) {
      case RequestStatus::kPending:
        return to == RequestStatus::kAssigned || to == RequestStatus::kExpired;
      case RequestStatus::kAssigned: return to == RequestStatus::kOnboard;
      case RequestStatus::kOnboard: return to == RequestStatus::kServed;
      default: return false;
    }
  };
  if (!legal(request.status, next)) {
    throw Error("request " + std::to_string(request.id.value) +
                ": illegal transition " + std::string(to_string(request.status)) +
                " -> " + std::string(to_string(next)));
  }
  request.status = next;
}

Stop pickup_stop(const Request& request) {
  return Stop{StopKind::kPickup, request.id, request.origin,
              request.latest_departure};
}

Stop dropoff_stop(const Request& request) {
  return Stop{StopKind::kDropoff, request.id, request.destination,
              request.latest_arrival};
}

int occupancy_at(const Tour& tour, int onboard_count, std::size_t prefix) {
  int load = onboard_count;
  for (std::size_t i = 0; i < prefix && i < tour.size(); ++i) {
    load += tour[i].kind == StopKind::kPickup ? 1 : -1;
  }
  return load;
}

bool has_valid_precedence(const Tour& tour) {
  struct Seen {
    bool pickup = false;
    bool dropoff = false;
  };
  std::unordered_map<RequestId, Seen> seen;
  for (const Stop& stop : tour) {
    Seen& s = seen[stop.request];
    if (stop.kind == StopKind::kPickup) {
      if (s.pickup || s.dropoff) return false;
      s.pickup = true;
    } else {
      if (s.dropoff) return false;
      s.dropoff = true;
    }
  }
  return true;
}

std::size_t requests_in_tour(const Tour& tour) {
  std::set<RequestId> ids;
  for (const Stop& stop : tour) ids.insert(stop.request);
  return ids.size();
}

}  // namespace ridematch
