#include "ridematch/simulator.hpp"

#include <algorithm>

#include "ridematch/demand.hpp"

namespace ridematch {

Simulator::Simulator(const RoadNetwork& net, std::vector<Request> demand,
                     std::vector<Vehicle> fleet, SimulatorOptions options)
    : net_(net), options_(options), fleet_(std::move(fleet)) {
  if (options_.update_interval <= 0) {
    throw ValidationError("update interval must be positive");
  }
  std::stable_sort(demand.begin(), demand.end(),
                   [](const Request& a, const Request& b) {
                     return a.request_time < b.request_time;
                   });
  trips_.reserve(demand.size());
  for (Request& r : demand) {
    if (!trip_index_.emplace(r.id, trips_.size()).second) {
      throw ValidationError("duplicate request id " + std::to_string(r.id.value));
    }
    trips_.push_back(TripRecord{std::move(r), {}, {}, {}, {}});
  }
  for (const Vehicle& v : fleet_) {
    if (!net_.contains(v.location)) throw UnknownNodeError(v.location);
    records_.push_back(VehicleRecord{v.id, 0.0, 0, 0});
  }
}

TripRecord& Simulator::trip(RequestId id) { return trips_[trip_index_.at(id)]; }

void Simulator::advance(Seconds until) {
  if (until < clock_) throw Error("cannot advance the clock backwards");
  for (std::size_t i = 0; i < fleet_.size(); ++i) {
    Vehicle& v = fleet_[i];
    VehicleRecord& rec = records_[i];
    while (!v.tour.empty() && v.available_at <= until) {
      // At v.location at time v.available_at: serve the stops located here.
      while (!v.tour.empty() && v.tour.front().node == v.location) {
        const Stop stop = v.tour.front();
        v.tour.erase(v.tour.begin());
        TripRecord& t = trip(stop.request);
        if (stop.kind == StopKind::kPickup) {
          transition(t.request, RequestStatus::kOnboard);
          t.pickup_time = v.available_at;
          v.scheduled.erase(stop.request);
          v.onboard.insert(stop.request);
        } else {
          transition(t.request, RequestStatus::kServed);
          t.dropoff_time = v.available_at;
          v.onboard.erase(stop.request);
          ++rec.requests_served;
        }
      }
      if (v.tour.empty()) break;
      auto link = net_.next_link(v.location, v.tour.front().node);
      if (!link) {
        throw Error("vehicle " + std::to_string(v.id.value) +
                    " cannot reach its next stop");
      }
      const Link& l = net_.links()[*link];
      rec.odometer_m += l.length_m;
      rec.active_time += l.travel_time;
      v.location = l.to;
      v.available_at += l.travel_time;
    }
    if (v.tour.empty()) v.available_at = std::max(v.available_at, until);
  }
  clock_ = until;
}

UpdateOutcome Simulator::update() {
  while (next_release_ < trips_.size() &&
         trips_[next_release_].request.request_time <= clock_) {
    pending_.push_back(next_release_++);
  }
  for (Vehicle& v : fleet_) {
    if (v.tour.empty()) v.available_at = std::max(v.available_at, clock_);
  }
  if (pending_.empty()) return {};

  std::vector<Request> batch;
  batch.reserve(pending_.size());
  for (std::size_t idx : pending_) batch.push_back(trips_[idx].request);

  UpdateOutcome outcome =
      run_update(options_.matcher, net_, clock_, batch, fleet_);

  for (const Assignment& a : outcome.finalized) {
    TripRecord& t = trip(a.request);
    transition(t.request, RequestStatus::kAssigned);
    t.vehicle = a.vehicle;
    t.assign_time = clock_;
  }
  for (RequestId r : outcome.expired) {
    transition(trip(r).request, RequestStatus::kExpired);
  }
  pending_.clear();
  for (RequestId r : outcome.deferred) pending_.push_back(trip_index_.at(r));

  UpdateRecord rec;
  rec.time = clock_;
  rec.pending = batch.size();
  rec.finalized = outcome.finalized.size();
  rec.expired = outcome.expired.size();
  rec.iterations = outcome.iterations;
  rec.step2 = outcome.step2;
  rec.cost_calculation_seconds = outcome.cost_calculation_seconds;
  rec.solution_seconds = outcome.solution_seconds;
  updates_.push_back(std::move(rec));
  return outcome;
}

bool Simulator::quiescent() const {
  if (next_release_ < trips_.size() || !pending_.empty()) return false;
  return std::all_of(fleet_.begin(), fleet_.end(),
                     [](const Vehicle& v) { return v.tour.empty(); });
}

SimulationResult Simulator::run() {
  while (true) {
    update();
    if (quiescent()) break;
    if (clock_ + options_.update_interval > options_.time_limit) {
      throw Error("simulation did not settle before the time limit");
    }
    advance(clock_ + options_.update_interval);
  }
  return SimulationResult{trips_, records_, updates_, clock_};
}

SimulationResult run_scenario(const ScenarioConfig& config,
                              const RoadNetwork& net) {
  validate_config(config);
  Rng rng(config.seed);
  std::vector<Request> demand = scenario_demand(config, net, rng);
  std::vector<Vehicle> fleet = initialize_fleet(config, net, demand, rng);
  Simulator sim(net, std::move(demand), std::move(fleet),
                SimulatorOptions{config.update_interval, config.matcher});
  return sim.run();
}

SimulationResult run_scenario(const ScenarioConfig& config) {
  RoadNetwork net = load_scenario_network(config);
  return run_scenario(config, net);
}

}  // namespace ridematch
