#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ridematch/simulator.hpp"

namespace ridematch {

/// Bumped whenever the metrics CSV columns change.
inline constexpr int kMetricsSchemaVersion = 1;

/// Fleet indicators for one scenario. Averages over an empty population are
/// nullopt and print as "NA". Travel time and speed cover the shared fleet
/// only; there is no background traffic in this simulator.
struct MetricsReport {
  std::size_t generated = 0;
  std::size_t served = 0;
  std::size_t expired = 0;
  std::size_t fleet_size = 0;
  /// Percent of generated requests served.
  std::optional<double> service_rate;
  /// Mean kilometres driven per vehicle.
  std::optional<double> avg_vkt_km;
  /// Mean (ride time - direct time) over served requests, minutes.
  std::optional<double> avg_detour_min;
  /// Mean (pickup - request time) over served requests, minutes.
  std::optional<double> avg_wait_min;
  /// Mean driving time of the vehicles that drove at all, minutes.
  std::optional<double> avg_shared_vehicle_travel_time_min;
  /// Total km over total driving hours of those vehicles.
  std::optional<double> avg_shared_vehicle_speed_kmh;
  /// Served requests per vehicle.
  std::optional<double> avg_assignments;
  std::size_t update_calls = 0;
  std::optional<double> avg_cost_calculation_s;
  std::optional<double> avg_solution_s;
  std::optional<double> avg_compute_s;
};

MetricsReport compute_metrics(std::span<const TripRecord> trips,
                              std::span<const VehicleRecord> vehicles,
                              std::span<const UpdateRecord> updates);

MetricsReport compute_metrics(const SimulationResult& result);

/// Column names of the metrics CSV, schema_version first.
std::vector<std::string> metrics_header();
std::vector<std::string> metrics_row(const MetricsReport& report);

/// Columns that hold wall-clock timings (not reproducible run to run).
bool is_timing_column(const std::string& name);

std::string format_summary(const MetricsReport& report);

/// Trip log CSV: request_id,t_r,O,D,q_r,l_r,vehicle_id,assign_t,pickup_t,
/// dropoff_t,H,status. Absent values are empty fields.
void write_trip_log(std::ostream& out, std::span<const TripRecord> trips);

std::string format_number(std::optional<double> value);

}  // namespace ridematch
