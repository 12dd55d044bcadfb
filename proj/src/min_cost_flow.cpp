#include "edgeplace/min_cost_flow.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

#include "edgeplace/common.hpp"

namespace edgeplace {

namespace {
constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
}  // namespace

MinCostFlow::MinCostFlow(int node_count) {
  if (node_count < 2) throw InvalidArgument("flow network needs at least two nodes");
  adjacency_.resize(node_count);
}

int MinCostFlow::AddArc(int from, int to, std::int64_t capacity, std::int64_t unit_cost) {
  if (from < 0 || from >= node_count() || to < 0 || to >= node_count())
    throw InvalidArgument("arc endpoint out of range");
  if (capacity < 0 || unit_cost < 0)
    throw InvalidArgument("arc capacity and cost must be non-negative");
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back(Arc{to, capacity, unit_cost});
  arcs_.push_back(Arc{from, 0, -unit_cost});
  capacity_.push_back(capacity);
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id / 2;
}

MinCostFlow::Result MinCostFlow::Solve(int source, int sink, std::int64_t max_flow) {
  const int n = node_count();
  std::vector<std::int64_t> potential(n, 0);
  std::vector<std::int64_t> dist(n);
  std::vector<int> via(n);
  Result result;

  using Entry = std::pair<std::int64_t, int>;
  while (result.flow < max_flow) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(via.begin(), via.end(), -1);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[source] = 0;
    heap.emplace(0, source);
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) continue;
      for (int a : adjacency_[u]) {
        const Arc& arc = arcs_[a];
        if (arc.residual == 0) continue;
        const std::int64_t reduced = arc.cost + potential[u] - potential[arc.to];
        const std::int64_t nd = d + reduced;
        if (nd < dist[arc.to]) {
          dist[arc.to] = nd;
          via[arc.to] = a;
          heap.emplace(nd, arc.to);
        }
      }
    }
    if (dist[sink] == kUnreached) break;

    // Nodes left unreached stay unreachable: new residual arcs only appear
    // between nodes on the augmenting path.
    for (int v = 0; v < n; ++v)
      if (dist[v] != kUnreached) potential[v] += dist[v];

    std::int64_t push = max_flow - result.flow;
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to)
      push = std::min(push, arcs_[via[v]].residual);
    for (int v = sink; v != source; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].residual -= push;
      arcs_[via[v] ^ 1].residual += push;
      result.cost += push * arcs_[via[v]].cost;
    }
    result.flow += push;
  }
  return result;
}

std::int64_t MinCostFlow::Flow(int arc) const {
  if (arc < 0 || static_cast<std::size_t>(arc) >= capacity_.size())
    throw InvalidArgument("arc id out of range");
  return capacity_[arc] - arcs_[2 * arc].residual;
}

}  // namespace edgeplace
