#include "edgeplace/report.hpp"

#include "edgeplace/io.hpp"

namespace edgeplace {

std::string SlotCsv(const RunReport& report) {
  std::string out =
      "slot,strategy,avg_delay_ms,max_delay_ms,violations,violation_rate,on_grid_w,"
      "green_used_w,migrations,linearization_gap_w\n";
  const std::string name(ToString(report.strategy));
  for (const auto& s : report.slots) {
    out += std::to_string(s.slot) + "," + name + "," + FormatDouble(s.average_delay_ms) + "," +
           FormatDouble(s.max_delay_ms) + "," + std::to_string(s.violation_count) + "," +
           FormatDouble(s.violation_rate) + "," + FormatDouble(s.on_grid_w) + "," +
           FormatDouble(s.green_used_w) + "," + std::to_string(s.migration_count) + "," +
           FormatDouble(s.linearization_gap_w) + "\n";
  }
  return out;
}

std::string CloudletCsv(const RunReport& report) {
  std::string out =
      "slot,strategy,cloudlet_id,vm_count,utilization_sum_pct,demand_w,green_w,on_grid_w\n";
  const std::string name(ToString(report.strategy));
  for (const auto& s : report.slots) {
    for (std::size_t k = 0; k < s.cloudlets.size(); ++k) {
      const auto& c = s.cloudlets[k];
      out += std::to_string(s.slot) + "," + name + "," + std::to_string(k) + "," +
             std::to_string(c.vm_count) + "," + FormatDouble(c.utilization_sum_pct) + "," +
             FormatDouble(c.demand_w) + "," + FormatDouble(c.green_w) + "," +
             FormatDouble(c.on_grid_w) + "\n";
    }
  }
  return out;
}

nlohmann::json SummaryJson(const RunReport& report, const nlohmann::json& scenario_echo) {
  const RunAggregates& a = report.aggregates;
  nlohmann::json doc;
  doc["strategy"] = std::string(ToString(report.strategy));
  doc["device_count"] = report.device_count;
  doc["cloudlet_count"] = report.cloudlet_count;
  doc["slot_count"] = report.slots.size();
  doc["gamma_ms"] = report.gamma_ms;
  doc["delta_t_hours"] = report.slot_duration_h;
  doc["units"] = {{"power", "W (average over one slot)"}, {"energy", "Wh"}};
  doc["aggregates"] = {
      {"mean_avg_delay_ms", a.mean_average_delay_ms},
      {"max_delay_ms", a.max_delay_ms},
      {"mean_violation_rate", a.mean_violation_rate},
      {"total_violations", a.total_violations},
      {"total_relaxed", a.total_relaxed},
      {"relaxed_slots", a.relaxed_slots},
      {"mean_on_grid_w", a.mean_on_grid_w},
      {"total_on_grid_w", a.total_on_grid_w},
      {"total_on_grid_wh", a.total_on_grid_wh},
      {"mean_linear_on_grid_w", a.mean_linear_on_grid_w},
      {"mean_linearization_gap_w", a.mean_linearization_gap_w},
      {"total_migrations", a.total_migrations},
  };
  doc["scenario"] = scenario_echo;
  return doc;
}

}  // namespace edgeplace
