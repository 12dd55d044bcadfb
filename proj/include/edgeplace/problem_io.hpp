#pragma once

#include <filesystem>

#include <json.hpp>

#include "edgeplace/optimizer.hpp"

namespace edgeplace {

// Instance document used for regression fixtures:
//   objective_kind: "linear_delay" | "rectified_energy"
//   costs:          rows of per-cloudlet costs (one row per group)
//   device_groups:  optional; row of `costs` per device (identity if absent)
//   capacities, green, loads: arrays
//   feasible_sets:  optional; per-device cloudlet lists
nlohmann::json ProblemToJson(const AssignmentProblem& problem);
AssignmentProblem ProblemFromJson(const nlohmann::json& doc);

AssignmentProblem LoadProblem(const std::filesystem::path& path);
void SaveProblem(const std::filesystem::path& path, const AssignmentProblem& problem);

}  // namespace edgeplace
