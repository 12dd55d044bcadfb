#pragma once

#include <cstdint>
#include <vector>

namespace edgeplace {

// Min-cost flow by successive shortest augmenting paths. Dijkstra runs on
// reduced costs kept non-negative by node potentials, so all arc costs must
// be non-negative on entry. Integer capacities and costs keep the search
// exact; ties between equal-cost paths go to the lower node id, which makes
// the result a deterministic function of the arc list.
class MinCostFlow {
 public:
  struct Result {
    std::int64_t flow = 0;
    std::int64_t cost = 0;
  };

  explicit MinCostFlow(int node_count);

  // Returns the arc id used by Flow().
  int AddArc(int from, int to, std::int64_t capacity, std::int64_t unit_cost);

  // Pushes up to `max_flow` units from source to sink at minimum cost.
  Result Solve(int source, int sink, std::int64_t max_flow);

  std::int64_t Flow(int arc) const;

  int node_count() const { return static_cast<int>(adjacency_.size()); }

 private:
  struct Arc {
    int to;
    std::int64_t residual;
    std::int64_t cost;
  };

  std::vector<Arc> arcs_;  // arc 2i is forward, 2i+1 its reverse
  std::vector<std::int64_t> capacity_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace edgeplace
