#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "edgeplace/common.hpp"

namespace edgeplace {

enum class ObjectiveKind {
  kLinearDelay,      // sum over devices of cost(device, cloudlet)
  kRectifiedEnergy,  // sum over cloudlets of max(load - green, 0)
};

enum class SolveStatus {
  kOptimal,
  kHeuristic,
  // At least one device had no delay-feasible cloudlet and was placed on the
  // lowest-delay cloudlet with room instead.
  kInfeasibleRelaxed,
};

std::string_view ToString(ObjectiveKind kind);
std::string_view ToString(SolveStatus status);

// Capacitated assignment of devices to cloudlets.
//
// Devices are grouped by the row of `costs` they use; for placement problems
// a group is the device's current base station, so devices in a group are
// cost-identical. `green` and `loads` are used by the energy objective only.
// `feasible_sets`, when present, restricts each device to a list of cloudlets
// (the delay ceiling); when absent every cloudlet is allowed.
struct AssignmentProblem {
  ObjectiveKind objective = ObjectiveKind::kLinearDelay;
  std::vector<int> device_groups;
  Matrix<double> costs;  // group x cloudlet, >= 0
  std::vector<int> capacities;
  std::vector<double> green;
  std::vector<double> loads;
  std::optional<std::vector<std::vector<int>>> feasible_sets;

  int device_count() const { return static_cast<int>(device_groups.size()); }
  int cloudlet_count() const { return static_cast<int>(capacities.size()); }
  int group_count() const { return static_cast<int>(costs.rows()); }

  double Cost(int device, int cloudlet) const { return costs(device_groups[device], cloudlet); }

  // Per-device 0/1 table of allowed cloudlets.
  Matrix<char> FeasibilityTable() const;

  // Throws InvalidArgument on inconsistent sizes, negative or non-finite
  // values, or out-of-range ids.
  void Validate() const;
};

struct Assignment {
  std::vector<int> placement;  // device -> cloudlet
  double objective_value = 0.0;
  SolveStatus status = SolveStatus::kOptimal;
  std::vector<bool> relaxed;  // device placed outside its feasible set

  int relaxed_count() const;
};

// Objective of `placement`, accumulated in device order. Every solver reports
// its objective through this function.
double EvaluateObjective(const AssignmentProblem& problem, std::span<const int> placement);

// Linearized energy objective (ignores problem.objective).
double EvaluateEnergyObjective(const AssignmentProblem& problem, std::span<const int> placement);
// Total delay (ignores problem.objective).
double EvaluateDelayObjective(const AssignmentProblem& problem, std::span<const int> placement);

bool RespectsCapacities(const AssignmentProblem& problem, std::span<const int> placement);
bool RespectsFeasibleSets(const AssignmentProblem& problem, std::span<const int> placement);

// Exact delay minimization as a transportation problem between device groups
// and cloudlets, solved by min-cost flow. Feasible sets are ignored. Within a
// group, devices are dealt to cloudlets in ascending id order. Throws
// InfeasibleError when total capacity is below the device count.
Assignment SolveTransportation(const AssignmentProblem& problem);

struct ExactLimits {
  int max_devices = 12;
  int max_cloudlets = 4;
};

// Depth-first branch-and-bound on the rectified energy objective with the
// delay ceiling enforced. Throws InvalidArgument when the instance exceeds
// `limits` and InfeasibleError when no feasible placement exists.
Assignment SolveEamExact(const AssignmentProblem& problem, const ExactLimits& limits = {});

struct HeuristicOptions {
  int move_cap = 10000;
  // After the energy search, apply moves that cut total delay without raising
  // the energy objective.
  bool delay_polish = true;
  // Perturbation restarts after the first local optimum; each applies a few
  // random moves or swaps to the best placement and searches again.
  int perturbation_rounds = 50;
  std::uint64_t seed = 1;
};

// Greedy construction, then local search over moves, swaps and ejection
// chains with seeded perturbation restarts. Deterministic for fixed options.
Assignment SolveEamHeuristic(const AssignmentProblem& problem,
                             const HeuristicOptions& options = {});

// Delay-reducing moves and swaps that keep the linearized energy objective
// from increasing and keep every non-relaxed device inside its feasible set.
// Returns the number of moves applied.
int PolishDelay(const AssignmentProblem& problem, Assignment& assignment, int move_cap);

// Exhaustive enumeration, for testing. Throws InvalidArgument when
// cloudlets^devices exceeds `max_enumerations`.
Assignment BruteForce(const AssignmentProblem& problem, double max_enumerations = 1e7);

}  // namespace edgeplace
