#include <benchmark/benchmark.h>

#include <random>

#include "ridematch/blossom.hpp"
#include "ridematch/demand.hpp"
#include "ridematch/engine.hpp"
#include "ridematch/hungarian.hpp"
#include "ridematch/scenario.hpp"
#include "ridematch/scheduling.hpp"

namespace {

using namespace ridematch;

const RoadNetwork& grid() {
  static const RoadNetwork net =
      load_network_file(std::string(RIDEMATCH_DATA_DIR) + "/grid_8x8.json");
  return net;
}

void BM_Hungarian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  CostMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<std::int64_t>(rng() % 1000);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lap(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hungarian)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_Blossom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 8 == 0) edges.push_back({u, v, static_cast<std::int64_t>(1 + rng() % 1000)});
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_matching(n, edges, true));
}
BENCHMARK(BM_Blossom)->RangeMultiplier(2)->Range(16, 256);

// Vehicle holding `range` requests, inserting one more.
void BM_PathCost(benchmark::State& state) {
  const RoadNetwork& net = grid();
  const Seconds now = 0;
  Vehicle v;
  v.id = VehicleId{0};
  v.location = NodeId{0};
  v.capacity = 20;
  for (int k = 0; k < state.range(0); ++k) {
    Request r = make_request_with_flexibility(RequestId{k}, now, NodeId{k + 1},
                                              NodeId{63 - k}, 3600, net);
    v.scheduled.insert(r.id);
    v.tour.push_back(pickup_stop(r));
    v.tour.push_back(dropoff_stop(r));
  }
  Request fresh = make_request_with_flexibility(RequestId{100}, now, NodeId{9},
                                                NodeId{54}, 3600, net);
  for (auto _ : state) benchmark::DoNotOptimize(path_cost(net, now, v, fresh));
}
BENCHMARK(BM_PathCost)->DenseRange(0, 6, 2);

void BM_GmoMatchUpdate(benchmark::State& state) {
  const RoadNetwork& net = grid();
  ScenarioConfig config;
  config.demand.rate_per_hour = 2000;
  config.loading_period = 60 * state.range(0) / 30;
  config.flexibility = 600;
  config.fleet_size = 40;
  config.seed = 5;
  Rng rng(config.seed);
  std::vector<Request> demand = generate_demand(config, net, rng);
  for (Request& r : demand) {
    r = make_request_with_flexibility(r.id, 0, r.origin, r.destination, 600, net);
  }
  std::vector<Vehicle> fleet = initialize_fleet(config, net, demand, rng);
  for (auto _ : state) {
    state.PauseTiming();
    std::vector<Vehicle> copy = fleet;
    state.ResumeTiming();
    benchmark::DoNotOptimize(gmomatch_update(net, 0, demand, copy));
  }
  state.counters["requests"] = static_cast<double>(demand.size());
}
BENCHMARK(BM_GmoMatchUpdate)->Arg(15)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
