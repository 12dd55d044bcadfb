#pragma once

// Seeded random assignment instances and an exhaustive reference solver that
// shares no code with the library solvers.

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "edgeplace/optimizer.hpp"

namespace edgeplace::testing {

inline int Draw(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Delay instance: up to `max_devices` devices spread over up to 4 groups,
// integer delays in [10, 60], capacities summing to at least the device count.
inline AssignmentProblem RandomDelayInstance(std::uint64_t seed, int max_devices,
                                             int max_cloudlets) {
  std::mt19937_64 rng(seed);
  const int n = Draw(rng, 1, max_devices);
  const int k = Draw(rng, 1, max_cloudlets);
  const int groups = Draw(rng, 1, 4);
  AssignmentProblem p;
  p.objective = ObjectiveKind::kLinearDelay;
  p.costs = Matrix<double>(groups, k);
  for (int g = 0; g < groups; ++g)
    for (int c = 0; c < k; ++c) p.costs(g, c) = Draw(rng, 10, 60);
  for (int i = 0; i < n; ++i) p.device_groups.push_back(Draw(rng, 0, groups - 1));
  int total = 0;
  for (int c = 0; c < k; ++c) {
    p.capacities.push_back(Draw(rng, 1, 4));
    total += p.capacities.back();
  }
  for (int c = 0; total < n; c = (c + 1) % k, ++total) ++p.capacities[c];
  return p;
}

// Energy instance with 3 cloudlets: integer loads in [10, 40] W, integer
// green in [0, 150] W, and per-device feasible sets drawn as random non-empty
// subsets. Callers discard instances without a feasible placement.
inline AssignmentProblem RandomEnergyInstance(std::uint64_t seed, int max_devices) {
  std::mt19937_64 rng(seed);
  const int n = Draw(rng, 2, max_devices);
  const int k = 3;
  AssignmentProblem p;
  p.objective = ObjectiveKind::kRectifiedEnergy;
  p.costs = Matrix<double>(n, k);
  for (int i = 0; i < n; ++i) {
    p.device_groups.push_back(i);
    for (int c = 0; c < k; ++c) p.costs(i, c) = Draw(rng, 10, 60);
  }
  int total = 0;
  for (int c = 0; c < k; ++c) {
    p.capacities.push_back(Draw(rng, 2, 5));
    total += p.capacities.back();
  }
  for (int c = 0; total < n; c = (c + 1) % k, ++total) ++p.capacities[c];
  for (int c = 0; c < k; ++c) p.green.push_back(Draw(rng, 0, 150));
  for (int i = 0; i < n; ++i) p.loads.push_back(Draw(rng, 10, 40));
  std::vector<std::vector<int>> sets(n);
  for (int i = 0; i < n; ++i) {
    const int mask = Draw(rng, 1, (1 << k) - 1);
    for (int c = 0; c < k; ++c)
      if (mask & (1 << c)) sets[i].push_back(c);
  }
  p.feasible_sets = std::move(sets);
  return p;
}

struct ReferenceOptimum {
  double objective = 0.0;
  std::vector<int> placement;
};

// Odometer enumeration over every device -> cloudlet map. The objective is
// recomputed from raw instance data: delay sums costs in device order, energy
// sums per-cloudlet rectified load in cloudlet order.
inline std::optional<ReferenceOptimum> ReferenceSolve(const AssignmentProblem& p) {
  const int n = static_cast<int>(p.device_groups.size());
  const int k = static_cast<int>(p.capacities.size());
  std::vector<int> x(n, 0);
  std::optional<ReferenceOptimum> best;
  while (true) {
    std::vector<int> count(k, 0);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (++count[x[i]] > p.capacities[x[i]]) ok = false;
      if (ok && p.feasible_sets) {
        bool allowed = false;
        for (int c : (*p.feasible_sets)[i]) allowed = allowed || c == x[i];
        ok = allowed;
      }
    }
    if (ok) {
      double value = 0.0;
      if (p.objective == ObjectiveKind::kLinearDelay) {
        for (int i = 0; i < n; ++i) value += p.costs(p.device_groups[i], x[i]);
      } else {
        for (int c = 0; c < k; ++c) {
          double load = 0.0;
          for (int i = 0; i < n; ++i)
            if (x[i] == c) load += p.loads[i];
          value += load > p.green[c] ? load - p.green[c] : 0.0;
        }
      }
      if (!best || value < best->objective) best = ReferenceOptimum{value, x};
    }
    int pos = 0;
    while (pos < n && ++x[pos] == k) x[pos++] = 0;
    if (pos == n) break;
  }
  return best;
}

}  // namespace edgeplace::testing
