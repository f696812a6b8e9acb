#include "ridematch/metrics.hpp"

#include <cstdio>
#include <sstream>

#include "ridematch/csv.hpp"

namespace ridematch {

namespace {

std::optional<double> mean(double sum, std::size_t count) {
  if (count == 0) return std::nullopt;
  return sum / static_cast<double>(count);
}

template <typename T>
std::string opt_int(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, VehicleId>) {
    return std::to_string(v->value);
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

std::string format_number(std::optional<double> value) {
  if (!value) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", *value);
  return buf;
}

MetricsReport compute_metrics(std::span<const TripRecord> trips,
                              std::span<const VehicleRecord> vehicles,
                              std::span<const UpdateRecord> updates) {
  MetricsReport m;
  m.generated = trips.size();
  m.fleet_size = vehicles.size();

  double detour = 0.0;
  double wait = 0.0;
  for (const TripRecord& t : trips) {
    if (t.request.status == RequestStatus::kExpired) ++m.expired;
    if (t.request.status != RequestStatus::kServed) continue;
    ++m.served;
    Seconds ride = *t.dropoff_time - *t.pickup_time;
    detour += static_cast<double>(ride - t.request.direct_time);
    wait += static_cast<double>(*t.pickup_time - t.request.request_time);
  }
  if (m.generated > 0) {
    m.service_rate = 100.0 * static_cast<double>(m.served) /
                     static_cast<double>(m.generated);
  }
  if (auto d = mean(detour, m.served)) m.avg_detour_min = *d / 60.0;
  if (auto w = mean(wait, m.served)) m.avg_wait_min = *w / 60.0;

  double meters = 0.0;
  double active_meters = 0.0;
  double active_seconds = 0.0;
  std::size_t active = 0;
  for (const VehicleRecord& v : vehicles) {
    meters += v.odometer_m;
    if (v.active_time > 0) {
      ++active;
      active_meters += v.odometer_m;
      active_seconds += static_cast<double>(v.active_time);
    }
  }
  if (auto km = mean(meters, vehicles.size())) m.avg_vkt_km = *km / 1000.0;
  if (auto s = mean(active_seconds, active)) {
    m.avg_shared_vehicle_travel_time_min = *s / 60.0;
  }
  if (active_seconds > 0.0) {
    m.avg_shared_vehicle_speed_kmh =
        (active_meters / 1000.0) / (active_seconds / 3600.0);
  }
  if (m.generated > 0 && !vehicles.empty()) {
    m.avg_assignments =
        static_cast<double>(m.served) / static_cast<double>(vehicles.size());
  }

  double cost = 0.0;
  double solve = 0.0;
  for (const UpdateRecord& u : updates) {
    cost += u.cost_calculation_seconds;
    solve += u.solution_seconds;
  }
  m.update_calls = updates.size();
  m.avg_cost_calculation_s = mean(cost, updates.size());
  m.avg_solution_s = mean(solve, updates.size());
  m.avg_compute_s = mean(cost + solve, updates.size());
  return m;
}

MetricsReport compute_metrics(const SimulationResult& result) {
  return compute_metrics(result.trips, result.vehicles, result.updates);
}

std::vector<std::string> metrics_header() {
  return {"schema_version",
          "generated",
          "served",
          "expired",
          "fleet_size",
          "service_rate_pct",
          "avg_vkt_km",
          "avg_detour_min",
          "avg_wait_min",
          "avg_shared_vehicle_travel_time_min",
          "avg_shared_vehicle_speed_kmh",
          "avg_assignments_per_vehicle",
          "update_calls",
          "avg_cost_calculation_s",
          "avg_solution_s",
          "avg_compute_s"};
}

std::vector<std::string> metrics_row(const MetricsReport& m) {
  return {std::to_string(kMetricsSchemaVersion),
          std::to_string(m.generated),
          std::to_string(m.served),
          std::to_string(m.expired),
          std::to_string(m.fleet_size),
          format_number(m.service_rate),
          format_number(m.avg_vkt_km),
          format_number(m.avg_detour_min),
          format_number(m.avg_wait_min),
          format_number(m.avg_shared_vehicle_travel_time_min),
          format_number(m.avg_shared_vehicle_speed_kmh),
          format_number(m.avg_assignments),
          std::to_string(m.update_calls),
          format_number(m.avg_cost_calculation_s),
          format_number(m.avg_solution_s),
          format_number(m.avg_compute_s)};
}

bool is_timing_column(const std::string& name) {
  return name == "avg_cost_calculation_s" || name == "avg_solution_s" ||
         name == "avg_compute_s";
}

std::string format_summary(const MetricsReport& m) {
  std::ostringstream out;
  out << "requests generated          " << m.generated << '\n'
      << "requests served             " << m.served << '\n'
      << "requests expired            " << m.expired << '\n'
      << "service rate (%)            " << format_number(m.service_rate) << '\n'
      << "avg VKT (km/vehicle)        " << format_number(m.avg_vkt_km) << '\n'
      << "avg detour (min)            " << format_number(m.avg_detour_min) << '\n'
      << "avg wait (min)              " << format_number(m.avg_wait_min) << '\n'
      << "shared fleet travel (min)   "
      << format_number(m.avg_shared_vehicle_travel_time_min) << '\n'
      << "shared fleet speed (km/h)   "
      << format_number(m.avg_shared_vehicle_speed_kmh) << '\n'
      << "assignments per vehicle     " << format_number(m.avg_assignments) << '\n'
      << "update calls                " << m.update_calls << '\n'
      << "compute per update (s)      " << format_number(m.avg_compute_s)
      << "  [cost " << format_number(m.avg_cost_calculation_s) << ", solve "
      << format_number(m.avg_solution_s) << "]\n";
  return out.str();
}

void write_trip_log(std::ostream& out, std::span<const TripRecord> trips) {
  const std::vector<std::string> header{
      "request_id", "t_r",      "O",         "D",          "q_r", "l_r",
      "vehicle_id", "assign_t", "pickup_t", "dropoff_t", "H",   "status"};
  write_csv_row(out, header);
  for (const TripRecord& t : trips) {
    const Request& r = t.request;
    const std::vector<std::string> row{
        std::to_string(r.id.value),
        std::to_string(r.request_time),
        std::to_string(r.origin.value),
        std::to_string(r.destination.value),
        std::to_string(r.latest_departure),
        std::to_string(r.latest_arrival),
        opt_int(t.vehicle),
        opt_int(t.assign_time),
        opt_int(t.pickup_time),
        opt_int(t.dropoff_time),
        std::to_string(r.direct_time),
        std::string(to_string(r.status))};
    write_csv_row(out, row);
  }
}

}  // namespace ridematch
