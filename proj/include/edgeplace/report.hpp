#pragma once

#include <string>

#include <json.hpp>

#include "edgeplace/simulator.hpp"

namespace edgeplace {

// Per-slot rows:
// slot,strategy,avg_delay_ms,max_delay_ms,violations,violation_rate,on_grid_w,
// green_used_w,migrations,linearization_gap_w
std::string SlotCsv(const RunReport& report);

// Per-slot, per-cloudlet energy rows:
// slot,strategy,cloudlet_id,vm_count,utilization_sum_pct,demand_w,green_w,on_grid_w
std::string CloudletCsv(const RunReport& report);

// Aggregates plus the scenario echo. Power is in W (average over a slot);
// energy totals are in Wh.
nlohmann::json SummaryJson(const RunReport& report, const nlohmann::json& scenario_echo);

}  // namespace edgeplace
