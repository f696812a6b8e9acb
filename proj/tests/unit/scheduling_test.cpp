#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ridematch/scheduling.hpp"

namespace ridematch {
namespace {

using testing::kA;
using testing::kB;
using testing::kC;

TEST(Constraints, PickupDeadline) {
  EXPECT_TRUE(check_z1(100, 120));
  EXPECT_FALSE(check_z1(121, 120));
  EXPECT_TRUE(check_z1(120, 120));
  static_assert(check_z1(5, 5));
}

TEST(Constraints, DropoffDeadline) {
  EXPECT_TRUE(check_z2(200, 300));
  EXPECT_TRUE(check_z2(300, 300));
  EXPECT_FALSE(check_z2(301, 300));
}

TEST(TourSchedule, LegSums) {
  auto net = testing::line_network();
  Request r = make_request_with_flexibility(RequestId{1}, 0, kB, kC, 300, net);
  auto s = tour_schedule(net, kA, 0, {pickup_stop(r), dropoff_stop(r)});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->arrivals, (std::vector<Seconds>{60, 120}));
  EXPECT_EQ(s->duration, 120);

  auto empty = tour_schedule(net, kA, 50, {});
  ASSERT_TRUE(empty);
  EXPECT_EQ(empty->duration, 0);
}

TEST(TourSchedule, UnreachableLeg) {
  RoadNetwork net({kA, kB}, {{kA, kB, 1, 10}});
  Stop s{StopKind::kPickup, RequestId{0}, kA, 1000};
  EXPECT_FALSE(tour_schedule(net, kB, 0, {s}));
}

TEST(TourSchedule, MatchesOracleLegs) {
  std::mt19937_64 rng(3);
  auto net = testing::random_network(rng, 12, 20, 90);
  testing::DistanceOracle oracle(net);
  for (int trial = 0; trial < 50; ++trial) {
    Tour t;
    for (int k = 0; k < 6; ++k) {
      t.push_back({StopKind::kPickup, RequestId{k},
                   net.nodes()[rng() % net.node_count()], 0});
    }
    NodeId start = net.nodes()[rng() % net.node_count()];
    auto s = tour_schedule(net, start, 7, t);
    ASSERT_TRUE(s);
    Seconds sum = 0;
    NodeId at = start;
    for (std::size_t i = 0; i < t.size(); ++i) {
      sum += *oracle.time(at, t[i].node);
      EXPECT_EQ(s->arrivals[i], 7 + sum);
      at = t[i].node;
    }
    EXPECT_EQ(s->duration, sum);
  }
}

TEST(PathCost, IdleVehicleEmptyTour) {
  auto net = testing::line_network();
  Request r = make_request_with_flexibility(RequestId{1}, 0, kB, kC, 300, net);
  Vehicle v = testing::idle_vehicle(1, kA);
  InsertionResult res = path_cost(net, 0, v, r);
  ASSERT_TRUE(res.feasible);
  EXPECT_EQ(res.cost, 120);
  EXPECT_EQ(res.tour, (Tour{pickup_stop(r), dropoff_stop(r)}));
}

TEST(PathCost, FullVehicleIsInfeasible) {
  auto net = testing::line_network();
  Request r = make_request_with_flexibility(RequestId{1}, 0, kB, kC, 300, net);
  Vehicle v = testing::idle_vehicle(1, kA, 1);
  v.onboard = {RequestId{9}};
  v.tour = {{StopKind::kDropoff, RequestId{9}, kC, 10000}};
  EXPECT_FALSE(path_cost(net, 0, v, r).feasible);
}

TEST(PathCost, CountsFromPlanningTime) {
  // Vehicle reaches A at t=40 while planning at t=10: cost covers the wait.
  auto net = testing::line_network();
  Request r = make_request_with_flexibility(RequestId{1}, 10, kA, kB, 300, net);
  Vehicle v = testing::idle_vehicle(1, kA);
  v.available_at = 40;
  auto res = path_cost(net, 10, v, r);
  ASSERT_TRUE(res.feasible);
  EXPECT_EQ(res.cost, 90);
}

TEST(PathCost, TightDeadlineRejected) {
  auto net = testing::line_network();
  Request r = make_request_with_flexibility(RequestId{1}, 0, kC, kB, 100, net);
  Vehicle v = testing::idle_vehicle(1, kA);  // 120 s from C
  EXPECT_FALSE(path_cost(net, 0, v, r).feasible);
  r = make_request_with_flexibility(RequestId{1}, 0, kC, kB, 120, net);
  EXPECT_TRUE(path_cost(net, 0, v, r).feasible);
}

// The worked example tour (+p2, -p1, -p2) and new r3: the exhaustive mode
// reaches both example candidates, and the result is never worse than
// either of them.
TEST(PathCost, WorkedExampleCandidates) {
  NodeId n0{0}, n1{1}, n2{2}, n3{3}, n4{4};
  auto net = make_grid_network(1, 5, 100, 30);
  Request p1 = make_request_with_flexibility(RequestId{1}, 0, n0, n2, 900, net);
  Request p2 = make_request_with_flexibility(RequestId{2}, 0, n1, n3, 900, net);
  Request r3 = make_request_with_flexibility(RequestId{3}, 0, n1, n4, 900, net);
  Vehicle v = testing::idle_vehicle(1, n0);
  v.onboard = {p1.id};
  v.scheduled = {p2.id};
  v.tour = {pickup_stop(p2), dropoff_stop(p1), dropoff_stop(p2)};

  TourContext ctx = TourContext::of(v, 0);
  Tour a{pickup_stop(r3), dropoff_stop(r3), pickup_stop(p2), dropoff_stop(p1),
         dropoff_stop(p2)};
  Tour b{pickup_stop(p2), dropoff_stop(p1), pickup_stop(r3), dropoff_stop(p2),
         dropoff_stop(r3)};
  auto ca = evaluate_tour(net, ctx, a);
  auto cb = evaluate_tour(net, ctx, b);
  ASSERT_TRUE(ca && cb);

  auto res = path_cost(net, 0, v, r3);
  ASSERT_TRUE(res.feasible);
  EXPECT_LE(res.cost, std::min(*ca, *cb));
  EXPECT_TRUE(has_valid_precedence(res.tour));
}

TEST(PathCost, TieBreakFirstInLoopOrder) {
  // Pickup and dropoff at the same spots as an existing request: several
  // orders cost the same; the fixed-order heuristic keeps the first (i, j).
  auto net = testing::line_network();
  Request a = make_request_with_flexibility(RequestId{1}, 0, kA, kC, 600, net);
  Request b = make_request_with_flexibility(RequestId{2}, 0, kA, kC, 600, net);
  TourContext ctx{kA, 0, 0, 0, 4};
  auto res = insertion_heuristic(net, ctx, {pickup_stop(a), dropoff_stop(a)},
                                 pickup_stop(b), dropoff_stop(b));
  ASSERT_TRUE(res.feasible);
  EXPECT_EQ(res.cost, 120);
  // (i=0, j=1) drives A-C-A-C; (i=0, j=2) is the first 120 s candidate.
  EXPECT_EQ(res.tour, (Tour{pickup_stop(b), pickup_stop(a), dropoff_stop(b),
                            dropoff_stop(a)}));
}

TEST(PathCost, OracleAgreementSmallTours) {
  std::mt19937_64 rng(21);
  int feasible = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto net = testing::random_network(rng, 8, 10, 120);
    testing::DistanceOracle oracle(net);
    auto inst = testing::random_insertion_instance(rng, net, trial % 3);
    const Vehicle& v = inst.vehicle;
    auto res = path_cost(net, inst.now, v, inst.request);
    Tour stops = v.tour;
    stops.push_back(pickup_stop(inst.request));
    stops.push_back(dropoff_stop(inst.request));
    auto best = testing::best_ordering(oracle, v.location, inst.now,
                                       v.departure_time(inst.now),
                                       static_cast<int>(v.onboard.size()),
                                       v.capacity, stops);
    ASSERT_EQ(res.feasible, best.has_value()) << "trial " << trial;
    if (!best) continue;
    ++feasible;
    EXPECT_EQ(res.cost, *best);
    auto check = testing::check_tour(oracle, v.location, inst.now,
                                     v.departure_time(inst.now),
                                     static_cast<int>(v.onboard.size()),
                                     v.capacity, res.tour);
    EXPECT_TRUE(check.feasible);
    EXPECT_EQ(check.cost, res.cost);
  }
  EXPECT_GT(feasible, 30);
}

TEST(PathCost, FixedOrderForLargerTours) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    auto net = testing::random_network(rng, 8, 10, 120);
    testing::DistanceOracle oracle(net);
    auto inst = testing::random_insertion_instance(rng, net, 3 + trial % 2);
    const Vehicle& v = inst.vehicle;
    auto res = path_cost(net, inst.now, v, inst.request);
    auto best = testing::best_fixed_order_insertion(
        oracle, v.location, inst.now, v.departure_time(inst.now),
        static_cast<int>(v.onboard.size()), v.capacity, v.tour,
        pickup_stop(inst.request), dropoff_stop(inst.request));
    ASSERT_EQ(res.feasible, best.has_value());
    if (!best) continue;
    EXPECT_EQ(res.cost, *best);
    Tour stripped;
    for (const Stop& s : res.tour) {
      if (s.request != inst.request.id) stripped.push_back(s);
    }
    EXPECT_EQ(stripped, v.tour);
  }
}

TEST(PathCost, LaterDeadlineNeverHurts) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    auto net = testing::random_network(rng, 8, 10, 120);
    auto inst = testing::random_insertion_instance(rng, net, trial % 4);
    auto before = path_cost(net, inst.now, inst.vehicle, inst.request);
    Request looser = inst.request;
    looser.latest_arrival += 200;
    auto after = path_cost(net, inst.now, inst.vehicle, looser);
    if (before.feasible) {
      EXPECT_TRUE(after.feasible);
      EXPECT_LE(after.cost, before.cost);
    }
  }
}

TEST(SplitMerge, SplitPoint) {
  auto stop = [](int r) { return Stop{StopKind::kPickup, RequestId{r}, kA, 0}; };
  auto [a, b] = split_tour({stop(1), stop(2), stop(3)});
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(b.size(), 1u);
  auto [c, d] = split_tour({stop(1), stop(2)});
  EXPECT_EQ(c, (Tour{stop(1)}));
  EXPECT_EQ(d, (Tour{stop(2)}));
}

TEST(SplitMerge, PartOneAlwaysBeforePartTwo) {
  auto net = make_grid_network(1, 4, 100, 30);
  Request r1 = make_request_with_flexibility(RequestId{1}, 0, NodeId{1}, NodeId{2}, 900, net);
  Request r2 = make_request_with_flexibility(RequestId{2}, 0, NodeId{0}, NodeId{3}, 900, net);
  Vehicle donor = testing::idle_vehicle(1, NodeId{1});
  testing::schedule(donor, r1, {pickup_stop(r1), dropoff_stop(r1)});
  donor.assigned = donor.scheduled;
  Vehicle recipient = testing::idle_vehicle(2, NodeId{0});
  testing::schedule(recipient, r2, {pickup_stop(r2), dropoff_stop(r2)});

  auto res = split_merge_cost(net, 0, donor, recipient);
  ASSERT_TRUE(res.feasible);
  // Picking r1 up on the way to r2's destination is optimal.
  EXPECT_EQ(res.tour, (Tour{pickup_stop(r2), pickup_stop(r1), dropoff_stop(r1),
                            dropoff_stop(r2)}));
  EXPECT_EQ(res.cost, 90);
}

TEST(SplitMerge, IntoEmptyRecipient) {
  auto net = testing::line_network();
  Request r = make_request_with_flexibility(RequestId{1}, 0, kB, kC, 600, net);
  Vehicle donor = testing::idle_vehicle(1, kB);
  testing::schedule(donor, r, {pickup_stop(r), dropoff_stop(r)});
  Vehicle recipient = testing::idle_vehicle(2, kA);
  auto res = split_merge_cost(net, 0, donor, recipient);
  ASSERT_TRUE(res.feasible);
  EXPECT_EQ(res.tour, donor.tour);
  EXPECT_EQ(res.cost, 120);
}

TEST(SplitMerge, OracleAgreement) {
  std::mt19937_64 rng(31);
  int feasible = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto net = testing::random_network(rng, 8, 12, 100);
    testing::DistanceOracle oracle(net);
    auto inst = testing::random_merge_instance(rng, net, 1 + trial % 2, trial % 3);
    const Vehicle& rec = inst.recipient;
    auto res = split_merge_cost(net, inst.now, inst.donor, rec);
    auto [first, second] = split_tour(inst.donor.tour);
    auto best = testing::best_block_interleaving(
        oracle, rec.location, inst.now, rec.departure_time(inst.now),
        static_cast<int>(rec.onboard.size()), rec.capacity, rec.tour, first,
        second);
    ASSERT_EQ(res.feasible, best.has_value()) << "trial " << trial;
    if (!best) continue;
    ++feasible;
    EXPECT_EQ(res.cost, *best);
    EXPECT_TRUE(testing::check_tour(oracle, rec.location, inst.now,
                                    rec.departure_time(inst.now),
                                    static_cast<int>(rec.onboard.size()),
                                    rec.capacity, res.tour)
                    .feasible);
  }
  EXPECT_GT(feasible, 20);
}

}  // namespace
}  // namespace ridematch
