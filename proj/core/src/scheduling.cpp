#include "ridematch/scheduling.hpp"

#include <cstddef>
#include <unordered_map>

namespace ridematch {

std::optional<Schedule> tour_schedule(const RoadNetwork& net, NodeId start,
                                      Seconds depart, const Tour& tour) {
  Schedule schedule;
  schedule.arrivals.reserve(tour.size());
  Seconds clock = depart;
  NodeId at = start;
  for (const Stop& stop : tour) {
    auto leg = net.shortest_travel_time(at, stop.node);
    if (!leg) return std::nullopt;
    clock += *leg;
    schedule.arrivals.push_back(clock);
    at = stop.node;
  }
  schedule.duration = clock - depart;
  return schedule;
}

TourContext TourContext::of(const Vehicle& vehicle, Seconds now) {
  return TourContext{vehicle.location, now, vehicle.departure_time(now),
                     static_cast<int>(vehicle.onboard.size()),
                     vehicle.capacity};
}

std::optional<Seconds> evaluate_tour(const RoadNetwork& net,
                                     const TourContext& ctx, const Tour& tour) {
  if (ctx.onboard > ctx.capacity) return std::nullopt;
  if (tour.empty()) return Seconds{0};
  Seconds clock = ctx.depart;
  NodeId at = ctx.start;
  int load = ctx.onboard;
  for (const Stop& stop : tour) {
    auto leg = net.shortest_travel_time(at, stop.node);
    if (!leg) return std::nullopt;
    clock += *leg;
    // z1 for pickups, z2 for dropoffs: both are "arrive by the deadline".
    bool on_time = stop.kind == StopKind::kPickup
                       ? check_z1(clock, stop.deadline)
                       : check_z2(clock, stop.deadline);
    if (!on_time) return std::nullopt;
    load += stop.kind == StopKind::kPickup ? 1 : -1;
    if (load > ctx.capacity) return std::nullopt;
    at = stop.node;
  }
  return clock - ctx.now;
}

namespace {

void consider(const RoadNetwork& net, const TourContext& ctx, Tour candidate,
              InsertionResult& best) {
  auto cost = evaluate_tour(net, ctx, candidate);
  if (!cost) return;
  if (!best.feasible || *cost < best.cost) {
    best.feasible = true;
    best.cost = *cost;
    best.tour = std::move(candidate);
  }
}

// Depth-first enumeration of precedence-valid orderings. Stops are tried in
// index order, so complete orderings are visited lexicographically by index;
// branches whose prefix already misses a deadline or overloads the vehicle
// are cut, which never removes a feasible ordering.
class OrderingSearch {
 public:
  OrderingSearch(const RoadNetwork& net, const TourContext& ctx, Tour stops)
      : net_(net), ctx_(ctx), stops_(std::move(stops)),
        used_(stops_.size(), false), partner_(stops_.size(), -1) {
    std::unordered_map<RequestId, std::ptrdiff_t> pickup_at;
    for (std::size_t k = 0; k < stops_.size(); ++k) {
      if (stops_[k].kind == StopKind::kPickup) {
        pickup_at[stops_[k].request] = static_cast<std::ptrdiff_t>(k);
      }
    }
    for (std::size_t k = 0; k < stops_.size(); ++k) {
      if (stops_[k].kind != StopKind::kDropoff) continue;
      auto it = pickup_at.find(stops_[k].request);
      if (it != pickup_at.end()) partner_[k] = it->second;
    }
    order_.reserve(stops_.size());
  }

  InsertionResult run() {
    if (ctx_.onboard <= ctx_.capacity) {
      descend(ctx_.start, ctx_.depart, ctx_.onboard);
    }
    return std::move(best_);
  }

 private:
  void descend(NodeId at, Seconds clock, int load) {
    if (order_.size() == stops_.size()) {
      Seconds cost = stops_.empty() ? 0 : clock - ctx_.now;
      if (!best_.feasible || cost < best_.cost) {
        best_.feasible = true;
        best_.cost = cost;
        best_.tour.clear();
        for (std::size_t k : order_) best_.tour.push_back(stops_[k]);
      }
      return;
    }
    for (std::size_t k = 0; k < stops_.size(); ++k) {
      if (used_[k]) continue;
      if (partner_[k] >= 0 && !used_[static_cast<std::size_t>(partner_[k])]) {
        continue;
      }
      const Stop& stop = stops_[k];
      auto leg = net_.shortest_travel_time(at, stop.node);
      if (!leg) continue;
      Seconds arrival = clock + *leg;
      if (arrival > stop.deadline) continue;
      int next_load = load + (stop.kind == StopKind::kPickup ? 1 : -1);
      if (next_load > ctx_.capacity) continue;
      used_[k] = true;
      order_.push_back(k);
      descend(stop.node, arrival, next_load);
      order_.pop_back();
      used_[k] = false;
    }
  }

  const RoadNetwork& net_;
  const TourContext& ctx_;
  Tour stops_;
  std::vector<bool> used_;
  std::vector<std::ptrdiff_t> partner_;
  std::vector<std::size_t> order_;
  InsertionResult best_;
};

}  // namespace

InsertionResult insertion_heuristic(const RoadNetwork& net,
                                    const TourContext& ctx, const Tour& tour,
                                    const Stop& pickup, const Stop& dropoff) {
  InsertionResult best;
  const std::size_t length = tour.size();
  for (std::size_t i = 0; i <= length; ++i) {
    Tour with_pickup = tour;
    with_pickup.insert(with_pickup.begin() + static_cast<std::ptrdiff_t>(i),
                       pickup);
    for (std::size_t j = i + 1; j <= with_pickup.size(); ++j) {
      Tour candidate = with_pickup;
      candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(j),
                       dropoff);
      consider(net, ctx, std::move(candidate), best);
    }
  }
  return best;
}

InsertionResult exhaustive_insertion(const RoadNetwork& net,
                                     const TourContext& ctx, const Tour& tour,
                                     const Stop& pickup, const Stop& dropoff) {
  Tour stops = tour;
  stops.push_back(pickup);
  stops.push_back(dropoff);
  return OrderingSearch(net, ctx, std::move(stops)).run();
}

InsertionResult path_cost(const RoadNetwork& net, Seconds now,
                          const Vehicle& vehicle, const Request& request) {
  if (vehicle.available_capacity() < 1) return {};
  const TourContext ctx = TourContext::of(vehicle, now);
  const Stop pickup = pickup_stop(request);
  const Stop dropoff = dropoff_stop(request);
  if (requests_in_tour(vehicle.tour) <= kExhaustiveRequestLimit) {
    return exhaustive_insertion(net, ctx, vehicle.tour, pickup, dropoff);
  }
  return insertion_heuristic(net, ctx, vehicle.tour, pickup, dropoff);
}

std::pair<Tour, Tour> split_tour(const Tour& tour) {
  const std::size_t cut = (tour.size() + 1) / 2;
  Tour first(tour.begin(), tour.begin() + static_cast<std::ptrdiff_t>(cut));
  Tour second(tour.begin() + static_cast<std::ptrdiff_t>(cut), tour.end());
  return {std::move(first), std::move(second)};
}

InsertionResult split_merge_cost(const RoadNetwork& net, Seconds now,
                                 const Vehicle& donor,
                                 const Vehicle& recipient) {
  const auto [first, second] = split_tour(donor.tour);
  const Tour& base = recipient.tour;
  const TourContext ctx = TourContext::of(recipient, now);

  InsertionResult best;
  for (std::size_t i = 0; i <= base.size(); ++i) {
    Tour with_first = base;
    with_first.insert(with_first.begin() + static_cast<std::ptrdiff_t>(i),
                      first.begin(), first.end());
    const std::size_t lo = i + first.size();
    const std::size_t hi = second.empty() ? lo : with_first.size();
    for (std::size_t j = lo; j <= hi; ++j) {
      Tour candidate = with_first;
      candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(j),
                       second.begin(), second.end());
      consider(net, ctx, std::move(candidate), best);
    }
  }
  return best;
}

}  // namespace ridematch
