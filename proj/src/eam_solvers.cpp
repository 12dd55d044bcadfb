#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "edgeplace/optimizer.hpp"
#include "edgeplace/random.hpp"

namespace edgeplace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Minimum objective or delay decrease for a local-search move to count.
constexpr double kImprovement = 1e-9;

double Excess(double load, double green) { return std::max(load - green, 0.0); }

void RequireEnergyObjective(const AssignmentProblem& problem, const char* solver) {
  problem.Validate();
  if (problem.objective != ObjectiveKind::kRectifiedEnergy)
    throw InvalidArgument(std::string(solver) + " requires the rectified energy objective");
}

void RequireCapacity(const AssignmentProblem& problem) {
  long long total = 0;
  for (int c : problem.capacities) total += c;
  if (total < problem.device_count())
    throw InfeasibleError("total cloudlet capacity " + std::to_string(total) +
                          " is below the device count " +
                          std::to_string(problem.device_count()) +
                          " (cloudlet capacity constraint)");
}

std::vector<std::vector<int>> FeasibleLists(const AssignmentProblem& problem) {
  const Matrix<char> table = problem.FeasibilityTable();
  std::vector<std::vector<int>> lists(problem.device_count());
  for (int i = 0; i < problem.device_count(); ++i)
    for (int k = 0; k < problem.cloudlet_count(); ++k)
      if (table(i, k)) lists[i].push_back(k);
  return lists;
}

// Mutable placement with per-cloudlet load, count and sorted member lists.
class PlacementState {
 public:
  explicit PlacementState(const AssignmentProblem& problem)
      : problem_(problem),
        feasible_(problem.FeasibilityTable()),
        placement_(problem.device_count(), -1),
        load_(problem.cloudlet_count(), 0.0),
        members_(problem.cloudlet_count()) {}

  PlacementState(const AssignmentProblem& problem, const std::vector<int>& placement)
      : PlacementState(problem) {
    for (int i = 0; i < problem.device_count(); ++i) Place(i, placement[i]);
  }

  int cloudlet_of(int i) const { return placement_[i]; }
  double load(int k) const { return load_[k]; }
  double green(int k) const { return problem_.green[k]; }
  double weight(int i) const { return problem_.loads[i]; }
  bool full(int k) const {
    return static_cast<int>(members_[k].size()) >= problem_.capacities[k];
  }
  bool feasible(int i, int k) const { return feasible_(i, k) != 0; }
  bool over(int k) const { return load_[k] > problem_.green[k]; }
  // Sum of per-cloudlet load above green supply.
  double objective() const {
    double total = 0.0;
    for (std::size_t k = 0; k < load_.size(); ++k) total += Excess(load_[k], problem_.green[k]);
    return total;
  }
  const std::vector<int>& members(int k) const { return members_[k]; }
  const std::vector<int>& placement() const { return placement_; }

  void Place(int i, int k) {
    placement_[i] = k;
    load_[k] += problem_.loads[i];
    auto& mem = members_[k];
    mem.insert(std::lower_bound(mem.begin(), mem.end(), i), i);
  }

  void Remove(int i) {
    const int k = placement_[i];
    load_[k] -= problem_.loads[i];
    auto& mem = members_[k];
    mem.erase(std::lower_bound(mem.begin(), mem.end(), i));
    placement_[i] = -1;
  }

  void Move(int i, int k) {
    Remove(i);
    Place(i, k);
  }

  // Objective change when device i moves to cloudlet b.
  double MoveDelta(int i, int b) const {
    const int a = placement_[i];
    const double w = problem_.loads[i];
    return Excess(load_[a] - w, green(a)) - Excess(load_[a], green(a)) +
           Excess(load_[b] + w, green(b)) - Excess(load_[b], green(b));
  }

  // Objective change when devices i and j exchange cloudlets.
  double SwapDelta(int i, int j) const {
    const int a = placement_[i];
    const int b = placement_[j];
    const double d = problem_.loads[j] - problem_.loads[i];
    return Excess(load_[a] + d, green(a)) - Excess(load_[a], green(a)) +
           Excess(load_[b] - d, green(b)) - Excess(load_[b], green(b));
  }

 private:
  const AssignmentProblem& problem_;
  Matrix<char> feasible_;
  std::vector<int> placement_;
  std::vector<double> load_;
  std::vector<std::vector<int>> members_;
};

// Frees room for device i in one of its feasible (full) cloudlets by shifting
// devices along a breadth-first chain of feasible moves ending at a cloudlet
// with spare capacity. Returns the cloudlet freed, or -1.
int FreeRoomByShifting(PlacementState& state, const AssignmentProblem& problem,
                       const std::vector<std::vector<int>>& feasible,
                       const std::vector<bool>& relaxed, int i) {
  const int m = problem.cloudlet_count();
  std::vector<int> parent_cloudlet(m, -2);  // -2 unvisited, -1 root
  std::vector<int> moved_device(m, -1);
  std::deque<int> queue;
  for (int k : feasible[i]) {
    parent_cloudlet[k] = -1;
    queue.push_back(k);
  }
  int target = -1;
  while (!queue.empty() && target < 0) {
    const int c = queue.front();
    queue.pop_front();
    for (int d : state.members(c)) {
      if (relaxed[d]) continue;
      for (int next : feasible[d]) {
        if (parent_cloudlet[next] != -2) continue;
        parent_cloudlet[next] = c;
        moved_device[next] = d;
        if (!state.full(next)) {
          target = next;
          break;
        }
        queue.push_back(next);
      }
      if (target >= 0) break;
    }
  }
  if (target < 0) return -1;
  int k = target;
  while (parent_cloudlet[k] != -1) {
    const int from = parent_cloudlet[k];
    state.Move(moved_device[k], k);
    k = from;
  }
  return k;
}

// Longest ejection chain tried by the heuristic, in devices.
constexpr int kChainDepth = 3;
// Chain evaluations allowed per search, so large instances stay bounded.
constexpr long long kChainBudget = 200'000;

// Searches for an objective-lowering ejection chain and applies the first one
// found. Device d1 leaves an over-green cloudlet c0 for c1, d2 leaves c1 for
// c2, and so on; the last device either closes the cycle at c0 or lands on a
// cloudlet with spare capacity. Every intermediate cloudlet keeps its count.
bool ApplyEjectionChain(PlacementState& state, const AssignmentProblem& problem,
                        const std::vector<std::vector<int>>& feasible,
                        const std::vector<bool>& relaxed) {
  const int m = problem.cloudlet_count();
  std::vector<int> chain;   // devices in order of ejection
  std::vector<int> target;  // cloudlet each device moves to
  std::vector<char> used(m, 0);
  long long budget = kChainBudget;
  int c0 = -1;
  double removal = 0.0;  // change at c0 from losing the first device

  const auto extend = [&](auto&& self, int device, double acc) -> bool {
    const double w = state.weight(device);
    for (int c : feasible[device]) {
      if (--budget < 0) return false;
      const int depth = static_cast<int>(chain.size());
      if (c == c0) {
        if (depth < 2) continue;
        const double first = state.weight(chain.front());
        const double closure = Excess(state.load(c0) - first + w, state.green(c0)) -
                               Excess(state.load(c0), state.green(c0));
        if (acc + closure < -kImprovement) {
          target.push_back(c);
          return true;
        }
        continue;
      }
      if (used[c]) continue;
      const double gain_here = Excess(state.load(c) + w, state.green(c)) -
                               Excess(state.load(c), state.green(c));
      if (!state.full(c) && removal + acc + gain_here < -kImprovement) {
        target.push_back(c);
        return true;
      }
      if (depth >= kChainDepth) continue;
      used[c] = 1;
      target.push_back(c);
      for (int e : state.members(c)) {
        if (relaxed[e]) continue;
        const double term = Excess(state.load(c) + w - state.weight(e), state.green(c)) -
                            Excess(state.load(c), state.green(c));
        // Closure and path-end terms are never below `removal`.
        if (removal + acc + term >= -kImprovement) continue;
        chain.push_back(e);
        if (self(self, e, acc + term)) return true;
        chain.pop_back();
        if (budget < 0) return false;
      }
      target.pop_back();
      used[c] = 0;
    }
    return false;
  };

  for (int a = 0; a < m && budget >= 0; ++a) {
    if (!state.over(a)) continue;
    c0 = a;
    used[a] = 1;
    const std::vector<int> members = state.members(a);
    for (int d : members) {
      if (relaxed[d]) continue;
      removal = Excess(state.load(a) - state.weight(d), state.green(a)) -
                Excess(state.load(a), state.green(a));
      chain.assign(1, d);
      target.clear();
      if (extend(extend, d, 0.0)) {
        // Apply back to front so each device finds its slot freed.
        std::vector<int> from(chain.size());
        for (std::size_t s = 0; s < chain.size(); ++s) from[s] = state.cloudlet_of(chain[s]);
        for (std::size_t s = 0; s < chain.size(); ++s) state.Remove(chain[s]);
        for (std::size_t s = 0; s < chain.size(); ++s) state.Place(chain[s], target[s]);
        return true;
      }
      if (budget < 0) break;
    }
    used[a] = 0;
  }
  return false;
}

// Best-improvement local search over moves and swaps, falling back to
// ejection chains. Returns the number of exchanges applied.
int LocalSearch(PlacementState& state, const AssignmentProblem& problem,
                const std::vector<std::vector<int>>& feasible, const std::vector<bool>& relaxed,
                int move_cap) {
  const int m = problem.cloudlet_count();
  int applied = 0;
  for (int moves = 0; moves < move_cap; ++moves) {
    double best_delta = -kImprovement;
    int best_i = -1;
    int best_target = -1;  // cloudlet for a move
    int best_partner = -1;  // device for a swap
    for (int a = 0; a < m; ++a) {
      if (!state.over(a)) continue;
      for (int i : state.members(a)) {
        if (relaxed[i]) continue;
        for (int b : feasible[i]) {
          if (b == a) continue;
          if (!state.full(b)) {
            const double delta = state.MoveDelta(i, b);
            if (delta < best_delta) {
              best_delta = delta;
              best_i = i;
              best_target = b;
              best_partner = -1;
            }
          }
          for (int j : state.members(b)) {
            if (relaxed[j] || !state.feasible(j, a)) continue;
            const double delta = state.SwapDelta(i, j);
            if (delta < best_delta) {
              best_delta = delta;
              best_i = i;
              best_target = -1;
              best_partner = j;
            }
          }
        }
      }
    }
    if (best_i < 0) {
      // Moves and swaps are exhausted; try a longer exchange before stopping.
      if (!ApplyEjectionChain(state, problem, feasible, relaxed)) break;
      ++applied;
      continue;
    }
    ++applied;
    if (best_partner < 0) {
      state.Move(best_i, best_target);
    } else {
      const int a = state.cloudlet_of(best_i);
      const int b = state.cloudlet_of(best_partner);
      state.Move(best_i, b);
      state.Move(best_partner, a);
    }
  }

  return applied;
}

// Applies `count` random capacity- and delay-feasible moves or swaps, each
// taking a device out of an above-green cloudlet when there is one.
void Perturb(PlacementState& state, const std::vector<std::vector<int>>& feasible,
             const std::vector<bool>& relaxed, Rng& rng, int count) {
  const int n = static_cast<int>(feasible.size());
  for (int done = 0, attempts = 0; done < count && attempts < 20 * count; ++attempts) {
    std::vector<int> pool;
    for (int i = 0; i < n; ++i)
      if (!relaxed[i] && feasible[i].size() > 1 && state.over(state.cloudlet_of(i))) pool.push_back(i);
    if (pool.empty())
      for (int i = 0; i < n; ++i)
        if (!relaxed[i] && feasible[i].size() > 1) pool.push_back(i);
    if (pool.empty()) return;
    const int i = pool[rng.Index(static_cast<int>(pool.size()))];
    const int a = state.cloudlet_of(i);
    const int b = feasible[i][rng.Index(static_cast<int>(feasible[i].size()))];
    if (b == a) continue;
    if (!state.full(b)) {
      state.Move(i, b);
      ++done;
      continue;
    }
    std::vector<int> partners;
    for (int j : state.members(b))
      if (!relaxed[j] && state.feasible(j, a)) partners.push_back(j);
    if (partners.empty()) continue;
    const int j = partners[rng.Index(static_cast<int>(partners.size()))];
    state.Move(i, b);
    state.Move(j, a);
    ++done;
  }
}

int LowestDelayWithRoom(const AssignmentProblem& problem, const PlacementState& state, int i) {
  int best = -1;
  for (int k = 0; k < problem.cloudlet_count(); ++k) {
    if (state.full(k)) continue;
    if (best < 0 || problem.Cost(i, k) < problem.Cost(i, best)) best = k;
  }
  return best;
}

}  // namespace

Assignment SolveEamExact(const AssignmentProblem& problem, const ExactLimits& limits) {
  RequireEnergyObjective(problem, "exact energy solver");
  const int n = problem.device_count();
  const int m = problem.cloudlet_count();
  if (n > limits.max_devices || m > limits.max_cloudlets)
    throw InvalidArgument("instance of " + std::to_string(n) + " devices x " + std::to_string(m) +
                          " cloudlets exceeds the exact solver limit of " +
                          std::to_string(limits.max_devices) + " x " +
                          std::to_string(limits.max_cloudlets));
  RequireCapacity(problem);
  const auto feasible = FeasibleLists(problem);
  for (int i = 0; i < n; ++i)
    if (feasible[i].empty())
      throw InfeasibleError("device " + std::to_string(i) +
                            " has no cloudlet within the delay threshold");

  // Heavy devices first: their placement moves the bound the most.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return problem.loads[a] > problem.loads[b]; });

  std::vector<double> load(m, 0.0);
  std::vector<int> count(m, 0);
  std::vector<int> placement(n, -1);
  std::vector<int> best;
  double best_cost = kInf;

  const auto lower_bound = [&](int pos) {
    std::vector<double> headroom(m, 0.0);
    double total_headroom = 0.0;
    for (int k = 0; k < m; ++k) {
      if (count[k] >= problem.capacities[k]) {
        headroom[k] = -1.0;  // full
        continue;
      }
      headroom[k] = std::max(problem.green[k] - load[k], 0.0);
      total_headroom += headroom[k];
    }
    double per_device = 0.0;
    double remaining = 0.0;
    for (int p = pos; p < n; ++p) {
      const int i = order[p];
      double best_room = -1.0;
      for (int k : feasible[i]) best_room = std::max(best_room, headroom[k]);
      if (best_room < 0.0) return kInf;
      per_device += std::max(problem.loads[i] - best_room, 0.0);
      remaining += problem.loads[i];
    }
    return std::max(per_device, std::max(remaining - total_headroom, 0.0));
  };

  const auto search = [&](auto&& self, int pos, double cost) -> void {
    if (pos == n) {
      if (cost < best_cost) {
        best_cost = cost;
        best = placement;
      }
      return;
    }
    if (cost + lower_bound(pos) >= best_cost) return;
    const int i = order[pos];
    const double w = problem.loads[i];
    struct Option {
      double increment;
      int cloudlet;
    };
    std::vector<Option> options;
    for (int k : feasible[i]) {
      if (count[k] >= problem.capacities[k]) continue;
      options.push_back(
          {Excess(load[k] + w, problem.green[k]) - Excess(load[k], problem.green[k]), k});
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& a, const Option& b) { return a.increment < b.increment; });
    for (const Option& o : options) {
      placement[i] = o.cloudlet;
      load[o.cloudlet] += w;
      ++count[o.cloudlet];
      self(self, pos + 1, cost + o.increment);
      load[o.cloudlet] -= w;
      --count[o.cloudlet];
    }
    placement[i] = -1;
  };
  search(search, 0, 0.0);

  if (best.empty() && n > 0)
    throw InfeasibleError("no placement satisfies both capacity and delay constraints");
  Assignment out;
  out.placement = std::move(best);
  out.relaxed.assign(n, false);
  out.objective_value = EvaluateObjective(problem, out.placement);
  out.status = SolveStatus::kOptimal;
  return out;
}

Assignment SolveEamHeuristic(const AssignmentProblem& problem, const HeuristicOptions& options) {
  RequireEnergyObjective(problem, "heuristic energy solver");
  RequireCapacity(problem);
  const int n = problem.device_count();
  const auto feasible = FeasibleLists(problem);

  // Devices with a feasible cloudlet by descending load, then the rest, so
  // unconstrained devices never take room a constrained one needs.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const bool fa = !feasible[a].empty();
    const bool fb = !feasible[b].empty();
    if (fa != fb) return fa;
    return problem.loads[a] > problem.loads[b];
  });

  PlacementState state(problem);
  std::vector<bool> relaxed(n, false);
  for (int i : order) {
    int choice = -1;
    for (int k : feasible[i]) {
      if (state.full(k)) continue;
      if (choice < 0) {
        choice = k;
        continue;
      }
      const double room_k = state.green(k) - state.load(k);
      const double room_c = state.green(choice) - state.load(choice);
      if (room_k > room_c || (room_k == room_c && problem.Cost(i, k) < problem.Cost(i, choice)))
        choice = k;
    }
    if (choice < 0 && !feasible[i].empty())
      choice = FreeRoomByShifting(state, problem, feasible, relaxed, i);
    if (choice < 0) {
      choice = LowestDelayWithRoom(problem, state, i);
      relaxed[i] = true;
    }
    state.Place(i, choice);
  }

  LocalSearch(state, problem, feasible, relaxed, options.move_cap);
  std::vector<int> best = state.placement();
  double best_value = state.objective();
  Rng rng(options.seed);
  for (int round = 0; round < options.perturbation_rounds && best_value > 0.0; ++round) {
    PlacementState trial(problem, best);
    Perturb(trial, feasible, relaxed, rng, 2 + round % 2);
    LocalSearch(trial, problem, feasible, relaxed, options.move_cap);
    const double value = trial.objective();
    if (value < best_value - kImprovement) {
      best = trial.placement();
      best_value = value;
    }
  }

  Assignment out;
  out.placement = best;
  out.relaxed = relaxed;
  out.status = std::find(relaxed.begin(), relaxed.end(), true) != relaxed.end()
                   ? SolveStatus::kInfeasibleRelaxed
                   : SolveStatus::kHeuristic;
  if (options.delay_polish) PolishDelay(problem, out, options.move_cap);
  out.objective_value = EvaluateObjective(problem, out.placement);
  return out;
}

int PolishDelay(const AssignmentProblem& problem, Assignment& assignment, int move_cap) {
  RequireEnergyObjective(problem, "delay polish");
  const int n = problem.device_count();
  const auto feasible = FeasibleLists(problem);
  if (assignment.relaxed.size() != static_cast<std::size_t>(n))
    assignment.relaxed.assign(n, false);
  PlacementState state(problem, assignment.placement);

  int applied = 0;
  for (; applied < move_cap; ++applied) {
    double best_gain = -kImprovement;
    int best_i = -1;
    int best_target = -1;
    int best_partner = -1;
    for (int i = 0; i < n; ++i) {
      if (assignment.relaxed[i]) continue;
      const int a = state.cloudlet_of(i);
      const double here = problem.Cost(i, a);
      for (int b : feasible[i]) {
        const double closer = problem.Cost(i, b) - here;
        if (!(closer < 0.0)) continue;
        if (!state.full(b) && closer < best_gain && state.MoveDelta(i, b) <= 0.0) {
          best_gain = closer;
          best_i = i;
          best_target = b;
          best_partner = -1;
        }
        for (int j : state.members(b)) {
          if (assignment.relaxed[j] || !state.feasible(j, a)) continue;
          const double gain = closer + problem.Cost(j, a) - problem.Cost(j, b);
          if (gain < best_gain && state.SwapDelta(i, j) <= 0.0) {
            best_gain = gain;
            best_i = i;
            best_target = -1;
            best_partner = j;
          }
        }
      }
    }
    if (best_i < 0) break;
    if (best_partner < 0) {
      state.Move(best_i, best_target);
    } else {
      const int a = state.cloudlet_of(best_i);
      const int b = state.cloudlet_of(best_partner);
      state.Move(best_i, b);
      state.Move(best_partner, a);
    }
  }
  assignment.placement = state.placement();
  assignment.objective_value = EvaluateObjective(problem, assignment.placement);
  return applied;
}

}  // namespace edgeplace
