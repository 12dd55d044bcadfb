#include "edgeplace/problem_io.hpp"

#include <string>

#include "edgeplace/io.hpp"

namespace edgeplace {

using nlohmann::json;

json ProblemToJson(const AssignmentProblem& problem) {
  json doc;
  doc["objective_kind"] = std::string(ToString(problem.objective));
  json costs = json::array();
  for (std::size_t j = 0; j < problem.costs.rows(); ++j) {
    json row = json::array();
    for (std::size_t k = 0; k < problem.costs.cols(); ++k) row.push_back(problem.costs(j, k));
    costs.push_back(std::move(row));
  }
  doc["costs"] = std::move(costs);
  doc["device_groups"] = problem.device_groups;
  doc["capacities"] = problem.capacities;
  doc["green"] = problem.green;
  doc["loads"] = problem.loads;
  if (problem.feasible_sets) {
    doc["feasible_sets"] = *problem.feasible_sets;
  } else {
    doc["feasible_sets"] = nullptr;
  }
  return doc;
}

AssignmentProblem ProblemFromJson(const json& doc) {
  try {
    if (!doc.is_object()) throw InvalidArgument("problem document must be an object");
    for (const auto& [key, value] : doc.items()) {
      (void)value;
      if (key != "objective_kind" && key != "costs" && key != "device_groups" &&
          key != "capacities" && key != "green" && key != "loads" && key != "feasible_sets")
        throw InvalidArgument("unknown key '" + key + "'");
    }
    AssignmentProblem p;
    const std::string kind = doc.at("objective_kind").get<std::string>();
    if (kind == "linear_delay") {
      p.objective = ObjectiveKind::kLinearDelay;
    } else if (kind == "rectified_energy") {
      p.objective = ObjectiveKind::kRectifiedEnergy;
    } else {
      throw InvalidArgument("objective_kind must be linear_delay or rectified_energy");
    }
    p.capacities = doc.at("capacities").get<std::vector<int>>();
    const auto rows = doc.at("costs").get<std::vector<std::vector<double>>>();
    p.costs = Matrix<double>(rows.size(), p.capacities.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[j].size() != p.capacities.size())
        throw InvalidArgument("costs row " + std::to_string(j) + " has the wrong length");
      for (std::size_t k = 0; k < rows[j].size(); ++k) p.costs(j, k) = rows[j][k];
    }
    if (doc.contains("device_groups") && !doc["device_groups"].is_null()) {
      p.device_groups = doc["device_groups"].get<std::vector<int>>();
    } else {
      p.device_groups.resize(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) p.device_groups[i] = static_cast<int>(i);
    }
    if (doc.contains("green")) p.green = doc["green"].get<std::vector<double>>();
    if (doc.contains("loads")) p.loads = doc["loads"].get<std::vector<double>>();
    if (doc.contains("feasible_sets") && !doc["feasible_sets"].is_null())
      p.feasible_sets = doc["feasible_sets"].get<std::vector<std::vector<int>>>();
    p.Validate();
    return p;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed problem document: ") + e.what());
  }
}

AssignmentProblem LoadProblem(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(ReadTextFile(path));
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
  return ProblemFromJson(doc);
}

void SaveProblem(const std::filesystem::path& path, const AssignmentProblem& problem) {
  WriteFileAtomic(path, ProblemToJson(problem).dump(2) + "\n");
}

}  // namespace edgeplace
