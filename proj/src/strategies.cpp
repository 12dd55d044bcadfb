#include "edgeplace/strategies.hpp"

#include <string>

namespace edgeplace {

std::string_view ToString(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kStatic:
      return "static";
    case StrategyKind::kLam:
      return "lam";
    case StrategyKind::kEam:
      return "eam";
  }
  return "unknown";
}

StrategyKind ParseStrategy(std::string_view name) {
  if (name == "static") return StrategyKind::kStatic;
  if (name == "lam") return StrategyKind::kLam;
  if (name == "eam") return StrategyKind::kEam;
  throw InvalidArgument("unknown strategy '" + std::string(name) +
                        "' (expected static, lam or eam)");
}

namespace {

void CheckSlot(int slot, const MobilityTrace& trace) {
  if (slot < 0 || slot >= trace.slot_count())
    throw InvalidArgument("slot " + std::to_string(slot) + " out of range");
}

AssignmentProblem BaseProblem(int slot, const MobilityTrace& trace, const Topology& topology) {
  CheckSlot(slot, trace);
  AssignmentProblem p;
  const auto assoc = trace.SlotAssociations(slot);
  p.device_groups.assign(assoc.begin(), assoc.end());
  p.costs = topology.delay_matrix();
  p.capacities.reserve(topology.cloudlet_count());
  for (const auto& c : topology.cloudlets()) p.capacities.push_back(c.capacity());
  return p;
}

Placement FromAssignment(int slot, Assignment a) {
  Placement p;
  p.slot = slot;
  p.cloudlet_of = std::move(a.placement);
  p.relaxed = std::move(a.relaxed);
  p.status = a.status;
  return p;
}

}  // namespace

AssignmentProblem BuildLamProblem(int slot, const MobilityTrace& trace, const Topology& topology) {
  AssignmentProblem p = BaseProblem(slot, trace, topology);
  p.objective = ObjectiveKind::kLinearDelay;
  return p;
}

AssignmentProblem BuildEamProblem(int slot, const MobilityTrace& trace, const Topology& topology,
                                  std::span<const Device> devices, const EnergyModel& model,
                                  double gamma_ms) {
  if (devices.size() != static_cast<std::size_t>(trace.device_count()))
    throw InvalidArgument("utilization list does not match the trace's device count");
  if (!(gamma_ms > 0.0)) throw InvalidArgument("gamma must be > 0");
  AssignmentProblem p = BaseProblem(slot, trace, topology);
  p.objective = ObjectiveKind::kRectifiedEnergy;
  for (const auto& c : topology.cloudlets()) p.green.push_back(c.params.green_power_w);
  p.loads.reserve(devices.size());
  for (const auto& d : devices) p.loads.push_back(model.PerVmLoad(d.utilization_pct));

  std::vector<std::vector<int>> by_bs(topology.base_station_count());
  for (int j = 0; j < topology.base_station_count(); ++j)
    for (int k = 0; k < topology.cloudlet_count(); ++k)
      if (topology.delay_matrix()(j, k) <= gamma_ms) by_bs[j].push_back(k);
  std::vector<std::vector<int>> sets(p.device_count());
  for (int i = 0; i < p.device_count(); ++i) sets[i] = by_bs[p.device_groups[i]];
  p.feasible_sets = std::move(sets);
  return p;
}

Placement LamPlace(int slot, const MobilityTrace& trace, const Topology& topology) {
  return FromAssignment(slot, SolveTransportation(BuildLamProblem(slot, trace, topology)));
}

Placement StaticPlace(const MobilityTrace& trace, const Topology& topology) {
  return LamPlace(0, trace, topology);
}

Placement EamPlace(int slot, const MobilityTrace& trace, const Topology& topology,
                   std::span<const Device> devices, const EnergyModel& model,
                   const EamOptions& options) {
  const AssignmentProblem problem =
      BuildEamProblem(slot, trace, topology, devices, model, options.gamma_ms);
  const bool small = problem.device_count() <= options.exact_limits.max_devices &&
                     problem.cloudlet_count() <= options.exact_limits.max_cloudlets;
  if (small) {
    try {
      Assignment exact = SolveEamExact(problem, options.exact_limits);
      if (options.heuristic.delay_polish)
        PolishDelay(problem, exact, options.heuristic.move_cap);
      return FromAssignment(slot, std::move(exact));
    } catch (const InfeasibleError&) {
      // No placement meets the delay ceiling; the heuristic relaxes devices.
    }
  }
  return FromAssignment(slot, SolveEamHeuristic(problem, options.heuristic));
}

}  // namespace edgeplace
