#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ridematch/engine.hpp"
#include "ridematch/model.hpp"
#include "ridematch/network.hpp"
#include "ridematch/scenario.hpp"

namespace ridematch {

struct TripRecord {
  Request request;
  std::optional<VehicleId> vehicle;
  std::optional<Seconds> assign_time;
  std::optional<Seconds> pickup_time;
  std::optional<Seconds> dropoff_time;
};

struct VehicleRecord {
  VehicleId id;
  double odometer_m = 0.0;
  /// Time spent driving with a non-empty tour.
  Seconds active_time = 0;
  std::size_t requests_served = 0;
};

struct UpdateRecord {
  Seconds time = 0;
  std::size_t pending = 0;
  std::size_t finalized = 0;
  std::size_t expired = 0;
  int iterations = 0;
  std::vector<Step2Stats> step2;
  double cost_calculation_seconds = 0.0;
  double solution_seconds = 0.0;
};

struct SimulationResult {
  std::vector<TripRecord> trips;
  std::vector<VehicleRecord> vehicles;
  std::vector<UpdateRecord> updates;
  Seconds end_time = 0;
};

struct SimulatorOptions {
  Seconds update_interval = 30;
  MatcherKind matcher = MatcherKind::kGmoMatch;
  /// Hard stop for the update loop; the run ends by quiescence long before.
  Seconds time_limit = 7 * 24 * 3600;
};

/// Rolling-horizon simulation. The matcher runs at t = k * update_interval
/// over requests released by then; between update times vehicles drive
/// their tours link by link. A vehicle in motion is represented by the next
/// node it will reach and the time it gets there.
class Simulator {
 public:
  Simulator(const RoadNetwork& net, std::vector<Request> demand,
            std::vector<Vehicle> fleet, SimulatorOptions options);

  Seconds clock() const { return clock_; }
  std::span<const Vehicle> fleet() const { return fleet_; }
  std::span<const TripRecord> trips() const { return trips_; }
  std::span<const VehicleRecord> vehicle_records() const { return records_; }
  std::span<const UpdateRecord> updates() const { return updates_; }

  /// Moves every vehicle forward to `until`, performing the pickups and
  /// dropoffs reached on the way. until >= clock().
  void advance(Seconds until);

  /// Releases requests with request time <= clock() and runs the matcher
  /// once. Returns the matcher's outcome (empty if nothing was pending).
  UpdateOutcome update();

  /// True once every request has been released and resolved and every tour
  /// is complete.
  bool quiescent() const;

  /// Alternates update() and advance() until quiescent.
  SimulationResult run();

 private:
  TripRecord& trip(RequestId id);

  const RoadNetwork& net_;
  SimulatorOptions options_;
  Seconds clock_ = 0;
  std::vector<Vehicle> fleet_;
  std::vector<VehicleRecord> records_;
  std::vector<TripRecord> trips_;
  std::unordered_map<RequestId, std::size_t> trip_index_;
  std::size_t next_release_ = 0;
  std::vector<std::size_t> pending_;
  std::vector<UpdateRecord> updates_;
};

/// Builds network, demand and fleet from the config and runs to quiescence.
SimulationResult run_scenario(const ScenarioConfig& config);

/// Same, on an already loaded network.
SimulationResult run_scenario(const ScenarioConfig& config,
                              const RoadNetwork& net);

}  // namespace ridematch
