#pragma once

#include <vector>

#include "spinshape/rational.hpp"

namespace spinshape {

/// Dinic's algorithm over arbitrary-precision integer capacities, so min
/// cuts of rational-capacity graphs (scaled by a common denominator) are
/// exact.
class MaxFlowGraph {
 public:
  explicit MaxFlowGraph(int node_count);

  /// Adds the arc u -> v with the given capacity (and a zero-capacity
  /// reverse arc). Returns the arc id.
  int add_arc(int u, int v, Int capacity);

  Int max_flow(int source, int sink);

  /// After max_flow: nodes reachable from the source in the residual graph.
  std::vector<char> source_side(int source) const;

 private:
  struct Arc {
    int to;
    Int cap;  // residual capacity
  };

  bool bfs(int source, int sink);
  Int dfs(int v, int sink, Int limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace spinshape
