#include "spinshape/maxflow.hpp"

#include <deque>
#include <limits>

namespace spinshape {

MaxFlowGraph::MaxFlowGraph(int node_count)
    : adjacency_(node_count), level_(node_count), iter_(node_count) {}

int MaxFlowGraph::add_arc(int u, int v, Int capacity) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back(Arc{v, std::move(capacity)});
  arcs_.push_back(Arc{u, Int(0)});
  adjacency_[u].push_back(id);
  adjacency_[v].push_back(id + 1);
  return id;
}

bool MaxFlowGraph::bfs(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::deque<int> queue{source};
  level_[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int id : adjacency_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

Int MaxFlowGraph::dfs(int v, int sink, Int limit) {
  if (v == sink) return limit;
  for (int& i = iter_[v]; i < static_cast<int>(adjacency_[v].size()); ++i) {
    int id = adjacency_[v][i];
    Arc& a = arcs_[id];
    if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
      Int pushed = dfs(a.to, sink, limit < a.cap ? limit : a.cap);
      if (pushed > 0) {
        a.cap -= pushed;
        arcs_[id ^ 1].cap += pushed;
        return pushed;
      }
    }
  }
  level_[v] = -1;
  return 0;
}

Int MaxFlowGraph::max_flow(int source, int sink) {
  Int total = 0;
  Int infinite = 0;
  for (const Arc& a : arcs_) infinite += a.cap;
  infinite += 1;
  while (bfs(source, sink)) {
    std::fill(iter_.begin(), iter_.end(), 0);
    while (true) {
      Int pushed = dfs(source, sink, infinite);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

std::vector<char> MaxFlowGraph::source_side(int source) const {
  std::vector<char> reachable(adjacency_.size(), 0);
  std::deque<int> queue{source};
  reachable[source] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int id : adjacency_[v]) {
      const Arc& a = arcs_[id];
      if (a.cap > 0 && !reachable[a.to]) {
        reachable[a.to] = 1;
        queue.push_back(a.to);
      }
    }
  }
  return reachable;
}

}  // namespace spinshape
