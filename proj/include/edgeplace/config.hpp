#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgeplace/simulator.hpp"

namespace edgeplace {

// Declarative run configuration. Key names follow the parameter table:
// lambda, beta, gamma, delta_t_hours, rho_s, alpha, epsilon, pm_count, g.
// See schema/run_config.schema.json.
struct RunConfig {
  struct TopologySection {
    int rows = 5;
    int cols = 5;
    double cell_km = 1.0;
    double lambda = 25.0;  // ms/km
    double beta = 10.0;    // ms
    std::optional<std::string> delay_matrix_file;
  };
  struct CloudletSection {
    int pm_count = 5;
    int epsilon = 6;       // proxy VMs per PM
    double rho_s = 80.0;   // W
    double alpha = 0.2;    // W per utilization percent
    double g = 1000.0;     // W
  };
  struct MobilitySection {
    std::optional<std::string> trace_file;
    bool qualify = true;  // drop devices that ever leave the grid area
    int devices = 632;
    int slots = 12;
    std::uint64_t seed = 1;
    double speed_min_kmh = 3.0;
    double speed_max_kmh = 30.0;
  };
  struct UtilizationSection {
    std::uint64_t seed = 2;
    double min_pct = 20.0;
    double max_pct = 100.0;
  };
  struct SolverSection {
    int exact_max_devices = 12;
    int exact_max_cloudlets = 4;
    int heuristic_move_cap = 10000;
    bool delay_polish = true;
    int perturbation_rounds = 50;
    std::uint64_t heuristic_seed = 1;
  };
  struct OutputSection {
    std::string dir = "out";
    std::string prefix = "run";
  };

  TopologySection topology;
  CloudletSection cloudlet;
  MobilitySection mobility;
  UtilizationSection utilization;
  double gamma = 40.0;         // ms
  double delta_t_hours = 0.5;
  std::vector<StrategyKind> strategies{StrategyKind::kStatic, StrategyKind::kLam,
                                       StrategyKind::kEam};
  SolverSection solver;
  OutputSection output;
};

// Validates and parses a config document; missing keys take defaults and
// unknown keys are rejected. Errors name the offending key path. Relative
// file paths are resolved against `base_dir`.
RunConfig ParseRunConfig(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
RunConfig LoadRunConfig(const std::filesystem::path& path);

// Fully resolved document; parsing it yields an identical config.
nlohmann::json ToJson(const RunConfig& config);

// Builds topology, trace and utilizations. The strategy is left at its
// default; callers set it per run.
Scenario BuildScenario(const RunConfig& config);

}  // namespace edgeplace
