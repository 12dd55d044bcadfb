#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "edgeplace/energy.hpp"
#include "edgeplace/mobility.hpp"
#include "edgeplace/optimizer.hpp"
#include "edgeplace/topology.hpp"

namespace edgeplace {

enum class StrategyKind { kStatic, kLam, kEam };

std::string_view ToString(StrategyKind kind);
// Accepts "static", "lam", "eam". Throws InvalidArgument.
StrategyKind ParseStrategy(std::string_view name);

struct Placement {
  int slot = 0;
  std::vector<int> cloudlet_of;  // device -> cloudlet
  std::vector<bool> relaxed;     // placed outside its delay-feasible set
  SolveStatus status = SolveStatus::kOptimal;
};

struct EamOptions {
  double gamma_ms = 40.0;
  // Instances up to this size go to branch-and-bound; larger ones to the
  // heuristic.
  ExactLimits exact_limits;
  HeuristicOptions heuristic;
};

// Delay problem for one slot: groups are base stations.
AssignmentProblem BuildLamProblem(int slot, const MobilityTrace& trace, const Topology& topology);

// Energy problem for one slot. Each device's feasible set holds the cloudlets
// within `gamma_ms` of its current base station.
AssignmentProblem BuildEamProblem(int slot, const MobilityTrace& trace, const Topology& topology,
                                  std::span<const Device> devices, const EnergyModel& model,
                                  double gamma_ms);

Placement LamPlace(int slot, const MobilityTrace& trace, const Topology& topology);

// Delay-optimal placement for slot 0, reused for every slot.
Placement StaticPlace(const MobilityTrace& trace, const Topology& topology);

Placement EamPlace(int slot, const MobilityTrace& trace, const Topology& topology,
                   std::span<const Device> devices, const EnergyModel& model,
                   const EamOptions& options);

}  // namespace edgeplace
