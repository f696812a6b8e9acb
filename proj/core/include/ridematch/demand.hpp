#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ridematch/model.hpp"
#include "ridematch/network.hpp"
#include "ridematch/scenario.hpp"

namespace ridematch {

/// Seeded generator. Draws are derived from the raw mt19937_64 stream (whose
/// output is fixed by the standard) so results match across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  /// Exponential with the given rate (events per unit time).
  double exponential(double rate);
  /// Index drawn proportionally to non-negative weights (sum must be > 0).
  std::size_t categorical(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
};

/// Requests from per-OD Poisson processes over the loading period, sorted by
/// request time with ids 0..n-1. Latest arrival is e + f + H(O, D).
std::vector<Request> generate_demand(const ScenarioConfig& config,
                                     const RoadNetwork& net, Rng& rng);

/// Reads "id,t_r,origin,destination,l_r" CSV rows (header required).
std::vector<Request> load_requests_file(const std::string& path,
                                        const RoadNetwork& net);

/// Demand for a scenario: generated, or read from the requests file.
std::vector<Request> scenario_demand(const ScenarioConfig& config,
                                     const RoadNetwork& net, Rng& rng);

/// Idle vehicles placed at nodes drawn proportionally to how many requests
/// originate there (uniformly over nodes when there is no demand).
std::vector<Vehicle> initialize_fleet(const ScenarioConfig& config,
                                      const RoadNetwork& net,
                                      std::span<const Request> demand,
                                      Rng& rng);

}  // namespace ridematch
