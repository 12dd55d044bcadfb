#include "edgeplace/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "edgeplace/min_cost_flow.hpp"

namespace edgeplace {

std::string_view ToString(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kLinearDelay:
      return "linear_delay";
    case ObjectiveKind::kRectifiedEnergy:
      return "rectified_energy";
  }
  return "unknown";
}

std::string_view ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kHeuristic:
      return "heuristic";
    case SolveStatus::kInfeasibleRelaxed:
      return "infeasible_relaxed";
  }
  return "unknown";
}

Matrix<char> AssignmentProblem::FeasibilityTable() const {
  Matrix<char> table(device_count(), cloudlet_count(), feasible_sets ? 0 : 1);
  if (feasible_sets) {
    for (int i = 0; i < device_count(); ++i)
      for (int k : (*feasible_sets)[i]) table(i, k) = 1;
  }
  return table;
}

void AssignmentProblem::Validate() const {
  const int n = device_count();
  const int m = cloudlet_count();
  if (m < 1) throw InvalidArgument("problem needs at least one cloudlet");
  if (costs.cols() != static_cast<std::size_t>(m))
    throw InvalidArgument("cost matrix has " + std::to_string(costs.cols()) +
                          " columns, expected " + std::to_string(m));
  for (double c : costs.data())
    if (!(c >= 0.0) || !std::isfinite(c))
      throw InvalidArgument("costs must be finite and >= 0");
  for (int g : device_groups)
    if (g < 0 || g >= group_count()) throw InvalidArgument("device group out of range");
  for (int c : capacities)
    if (c < 0) throw InvalidArgument("capacities must be >= 0");
  if (objective == ObjectiveKind::kRectifiedEnergy) {
    if (green.size() != static_cast<std::size_t>(m))
      throw InvalidArgument("green must have one entry per cloudlet");
    if (loads.size() != static_cast<std::size_t>(n))
      throw InvalidArgument("loads must have one entry per device");
    for (double g : green)
      if (!(g >= 0.0) || !std::isfinite(g)) throw InvalidArgument("green must be finite and >= 0");
    for (double w : loads)
      if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidArgument("loads must be finite and >= 0");
  }
  if (feasible_sets) {
    if (feasible_sets->size() != static_cast<std::size_t>(n))
      throw InvalidArgument("feasible_sets must have one entry per device");
    for (const auto& set : *feasible_sets)
      for (int k : set)
        if (k < 0 || k >= m) throw InvalidArgument("feasible set references unknown cloudlet");
  }
}

int Assignment::relaxed_count() const {
  return static_cast<int>(std::count(relaxed.begin(), relaxed.end(), true));
}

double EvaluateEnergyObjective(const AssignmentProblem& problem, std::span<const int> placement) {
  std::vector<double> load(problem.cloudlet_count(), 0.0);
  for (std::size_t i = 0; i < placement.size(); ++i) load[placement[i]] += problem.loads[i];
  double total = 0.0;
  for (int k = 0; k < problem.cloudlet_count(); ++k)
    total += std::max(load[k] - problem.green[k], 0.0);
  return total;
}

double EvaluateDelayObjective(const AssignmentProblem& problem, std::span<const int> placement) {
  double total = 0.0;
  for (std::size_t i = 0; i < placement.size(); ++i)
    total += problem.Cost(static_cast<int>(i), placement[i]);
  return total;
}

double EvaluateObjective(const AssignmentProblem& problem, std::span<const int> placement) {
  if (placement.size() != static_cast<std::size_t>(problem.device_count()))
    throw InvalidArgument("placement size does not match the device count");
  return problem.objective == ObjectiveKind::kLinearDelay
             ? EvaluateDelayObjective(problem, placement)
             : EvaluateEnergyObjective(problem, placement);
}

bool RespectsCapacities(const AssignmentProblem& problem, std::span<const int> placement) {
  std::vector<int> count(problem.cloudlet_count(), 0);
  for (int k : placement) {
    if (k < 0 || k >= problem.cloudlet_count()) return false;
    if (++count[k] > problem.capacities[k]) return false;
  }
  return placement.size() == static_cast<std::size_t>(problem.device_count());
}

bool RespectsFeasibleSets(const AssignmentProblem& problem, std::span<const int> placement) {
  if (!problem.feasible_sets) return true;
  for (std::size_t i = 0; i < placement.size(); ++i) {
    const auto& set = (*problem.feasible_sets)[i];
    if (std::find(set.begin(), set.end(), placement[i]) == set.end()) return false;
  }
  return true;
}

namespace {

constexpr double kCostScale = 1e6;  // delay units per ms in the flow network
constexpr double kMaxCost = 1e6;    // ms; keeps scaled totals within int64

void RequireCapacity(const AssignmentProblem& problem) {
  long long total = 0;
  for (int c : problem.capacities) total += c;
  if (total < problem.device_count())
    throw InfeasibleError("total cloudlet capacity " + std::to_string(total) +
                          " is below the device count " +
                          std::to_string(problem.device_count()) +
                          " (cloudlet capacity constraint)");
}

}  // namespace

Assignment SolveTransportation(const AssignmentProblem& problem) {
  problem.Validate();
  if (problem.objective != ObjectiveKind::kLinearDelay)
    throw InvalidArgument("transportation solver requires the linear delay objective");
  RequireCapacity(problem);
  for (double c : problem.costs.data())
    if (c > kMaxCost) throw InvalidArgument("delay cost exceeds 1e6 ms");

  const int groups = problem.group_count();
  const int m = problem.cloudlet_count();
  std::vector<std::vector<int>> members(groups);
  for (int i = 0; i < problem.device_count(); ++i)
    members[problem.device_groups[i]].push_back(i);

  // source -> group -> cloudlet -> sink
  const int source = 0;
  const int sink = 1 + groups + m;
  MinCostFlow flow(sink + 1);
  for (int j = 0; j < groups; ++j)
    if (!members[j].empty())
      flow.AddArc(source, 1 + j, static_cast<std::int64_t>(members[j].size()), 0);
  Matrix<int> arc_of(groups, m, -1);
  for (int j = 0; j < groups; ++j) {
    if (members[j].empty()) continue;
    for (int k = 0; k < m; ++k) {
      const auto cost = static_cast<std::int64_t>(std::llround(problem.costs(j, k) * kCostScale));
      arc_of(j, k) =
          flow.AddArc(1 + j, 1 + groups + k, static_cast<std::int64_t>(members[j].size()), cost);
    }
  }
  for (int k = 0; k < m; ++k) flow.AddArc(1 + groups + k, sink, problem.capacities[k], 0);

  const auto result = flow.Solve(source, sink, problem.device_count());
  if (result.flow != problem.device_count())
    throw InfeasibleError("capacity cannot absorb every device");

  Assignment out;
  out.placement.assign(problem.device_count(), -1);
  out.relaxed.assign(problem.device_count(), false);
  for (int j = 0; j < groups; ++j) {
    std::size_t next = 0;
    for (int k = 0; k < m && next < members[j].size(); ++k) {
      if (arc_of(j, k) < 0) continue;
      for (std::int64_t u = flow.Flow(arc_of(j, k)); u > 0; --u) out.placement[members[j][next++]] = k;
    }
  }
  out.objective_value = EvaluateObjective(problem, out.placement);
  out.status = SolveStatus::kOptimal;
  return out;
}

Assignment BruteForce(const AssignmentProblem& problem, double max_enumerations) {
  problem.Validate();
  const int n = problem.device_count();
  const int m = problem.cloudlet_count();
  if (std::pow(static_cast<double>(m), n) > max_enumerations)
    throw InvalidArgument("instance too large for exhaustive enumeration");
  const Matrix<char> allowed = problem.FeasibilityTable();

  std::vector<int> placement(n, 0);
  std::vector<int> count(m, 0);
  std::vector<int> best;
  double best_value = std::numeric_limits<double>::infinity();

  // Depth-first over devices; each leaf is scored from scratch.
  const auto visit = [&](auto&& self, int i) -> void {
    if (i == n) {
      const double value = EvaluateObjective(problem, placement);
      if (best.empty() || value < best_value) {
        best_value = value;
        best = placement;
      }
      return;
    }
    for (int k = 0; k < m; ++k) {
      if (!allowed(i, k) || count[k] >= problem.capacities[k]) continue;
      placement[i] = k;
      ++count[k];
      self(self, i + 1);
      --count[k];
    }
  };
  visit(visit, 0);

  if (best.empty() && n > 0) throw InfeasibleError("no placement satisfies the constraints");
  Assignment out;
  out.placement = std::move(best);
  out.relaxed.assign(n, false);
  out.objective_value = n > 0 ? best_value : 0.0;
  out.status = SolveStatus::kOptimal;
  return out;
}

}  // namespace edgeplace
