#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgeplace/energy.hpp"
#include "edgeplace/mobility.hpp"
#include "edgeplace/strategies.hpp"
#include "edgeplace/topology.hpp"

namespace edgeplace {

struct Scenario {
  Topology topology;
  MobilityTrace trace;
  std::vector<Device> devices;
  StrategyKind strategy = StrategyKind::kLam;
  double gamma_ms = 40.0;
  ExactLimits exact_limits;
  HeuristicOptions heuristic;

  // Throws InvalidArgument on inconsistent inputs and InfeasibleError when
  // total cloudlet capacity is below the device count.
  void Validate() const;
  EnergyModel energy_model() const;
};

struct SlotMetrics {
  int slot = 0;
  double average_delay_ms = 0.0;
  double max_delay_ms = 0.0;
  int violation_count = 0;     // devices with delay above gamma
  double violation_rate = 0.0; // violation_count / device count
  int relaxed_count = 0;       // devices the solver could not keep within gamma
  std::vector<CloudletEnergyState> cloudlets;
  double demand_w = 0.0;       // exact model, all cloudlets
  double green_w = 0.0;
  double green_used_w = 0.0;   // sum of min(demand, green)
  double on_grid_w = 0.0;      // sum of max(demand - green, 0), exact model
  double linear_on_grid_w = 0.0;  // same with linearized demand
  double linearization_gap_w = 0.0;  // exact minus linearized demand
  int migration_count = 0;
};

struct RunAggregates {
  double mean_average_delay_ms = 0.0;
  double max_delay_ms = 0.0;
  double mean_violation_rate = 0.0;
  int total_violations = 0;
  int total_relaxed = 0;
  int relaxed_slots = 0;
  double total_on_grid_w = 0.0;  // summed over slots
  double mean_on_grid_w = 0.0;   // per slot, network total
  double total_on_grid_wh = 0.0;
  double mean_linear_on_grid_w = 0.0;
  double mean_linearization_gap_w = 0.0;
  int total_migrations = 0;
};

struct RunReport {
  StrategyKind strategy = StrategyKind::kLam;
  int device_count = 0;
  int cloudlet_count = 0;
  double gamma_ms = 0.0;
  double slot_duration_h = 0.0;
  std::vector<SlotMetrics> slots;
  RunAggregates aggregates;
};

// Metrics of one slot's placement. `previous` is empty for the first slot.
SlotMetrics EvaluateSlot(const Scenario& scenario, const EnergyModel& model, int slot,
                         const Placement& placement, std::span<const int> previous);

RunAggregates Summarize(std::span<const SlotMetrics> slots, double slot_duration_h);

// Runs the scenario's strategy over every slot. Solver failures are rethrown
// with the failing slot in the message.
RunReport Run(const Scenario& scenario);

// One run per value with every cloudlet's green supply set to it. Runs are
// independent and execute concurrently; results follow input order.
std::vector<RunReport> SweepGreen(const Scenario& scenario, std::span<const double> green_w);

// One run per delay coefficient with the delay matrix rebuilt.
std::vector<RunReport> SweepLambda(const Scenario& scenario,
                                   std::span<const double> lambda_ms_per_km);

}  // namespace edgeplace
