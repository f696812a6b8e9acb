#pragma once

#include <optional>
#include <vector>

#include "ridematch/model.hpp"
#include "ridematch/network.hpp"

namespace ridematch {

/// Pickup no later than the latest departure (non-strict).
constexpr bool check_z1(Seconds pickup_arrival, Seconds latest_departure) {
  return pickup_arrival <= latest_departure;
}

/// Dropoff no later than the latest arrival (non-strict).
constexpr bool check_z2(Seconds dropoff_arrival, Seconds latest_arrival) {
  return dropoff_arrival <= latest_arrival;
}

struct Schedule {
  std::vector<Seconds> arrivals;
  /// Last arrival minus departure; zero for an empty tour.
  Seconds duration = 0;
};

/// Arrival time at every stop when leaving `start` at `depart` and driving
/// shortest paths between consecutive stops. nullopt if a leg is unreachable.
std::optional<Schedule> tour_schedule(const RoadNetwork& net, NodeId start,
                                      Seconds depart, const Tour& tour);

/// Everything needed to judge a tour for one vehicle at planning time `now`.
struct TourContext {
  NodeId start;
  Seconds now = 0;
  Seconds depart = 0;
  int onboard = 0;
  int capacity = 0;

  static TourContext of(const Vehicle& vehicle, Seconds now);
};

/// Cost of `tour` (last arrival minus `now`) if every stop meets its
/// deadline and the load never exceeds capacity; nullopt otherwise.
std::optional<Seconds> evaluate_tour(const RoadNetwork& net,
                                     const TourContext& ctx, const Tour& tour);

struct InsertionResult {
  Seconds cost = 0;
  Tour tour;
  bool feasible = false;
};

/// Tours with at most this many requests are re-ordered exhaustively when a
/// new request is priced; longer tours keep their order.
inline constexpr std::size_t kExhaustiveRequestLimit = 2;

/// Cheapest feasible tour serving the vehicle's current stops plus
/// `request`. Small tours are re-ordered exhaustively; larger ones only
/// receive the pickup/dropoff insertions. First minimum in enumeration order
/// wins ties.
InsertionResult path_cost(const RoadNetwork& net, Seconds now,
                          const Vehicle& vehicle, const Request& request);

/// The fixed-order insertion heuristic on its own: pickup at each of the
/// |tour|+1 positions, dropoff at every later position.
InsertionResult insertion_heuristic(const RoadNetwork& net,
                                    const TourContext& ctx, const Tour& tour,
                                    const Stop& pickup, const Stop& dropoff);

/// Cheapest precedence-respecting ordering of tour + {pickup, dropoff}.
InsertionResult exhaustive_insertion(const RoadNetwork& net,
                                     const TourContext& ctx, const Tour& tour,
                                     const Stop& pickup, const Stop& dropoff);

/// Donor's tour cut at ceil(n/2); the first part goes in front.
std::pair<Tour, Tour> split_tour(const Tour& tour);

/// Moves the donor's tour into the recipient's: both halves of the donor
/// tour are inserted as contiguous blocks, the first half before the second,
/// without reordering any of the three pieces. Returns the cheapest feasible
/// merged tour for the recipient.
InsertionResult split_merge_cost(const RoadNetwork& net, Seconds now,
                                 const Vehicle& donor,
                                 const Vehicle& recipient);

}  // namespace ridematch
