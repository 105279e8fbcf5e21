#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace rainbow::detail {

// Dinic's algorithm on integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : graph_(nodes), level_(nodes), next_(nodes) {}

  void add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
    graph_[from].push_back({to, graph_[to].size(), capacity});
    graph_[to].push_back({from, graph_[from].size() - 1, 0});
  }

  std::int64_t run(std::size_t source, std::size_t sink) {
    std::int64_t flow = 0;
    while (bfs(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (std::int64_t pushed = dfs(source, sink, std::numeric_limits<std::int64_t>::max())) {
        flow += pushed;
      }
    }
    return flow;
  }

  // After run(): nodes that can still reach `sink` in the residual graph.
  // Their complement is the largest source side among all minimum cuts.
  std::vector<char> reaches_sink(std::size_t sink) const {
    std::vector<char> mark(graph_.size(), 0);
    std::queue<std::size_t> queue;
    mark[sink] = 1;
    queue.push(sink);
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop();
      for (const Arc& a : graph_[x]) {
        // residual arc a.to -> x exists iff the reverse of `a` has capacity
        const Arc& back = graph_[a.to][a.rev];
        if (!mark[a.to] && back.capacity > 0) {
          mark[a.to] = 1;
          queue.push(a.to);
        }
      }
    }
    return mark;
  }

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    std::int64_t capacity;
  };

  bool bfs(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop();
      for (const Arc& a : graph_[x]) {
        if (a.capacity > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[x] + 1;
          queue.push(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t dfs(std::size_t x, std::size_t sink, std::int64_t limit) {
    if (x == sink) return limit;
    for (std::size_t& i = next_[x]; i < graph_[x].size(); ++i) {
      Arc& a = graph_[x][i];
      if (a.capacity <= 0 || level_[a.to] != level_[x] + 1) continue;
      if (std::int64_t pushed = dfs(a.to, sink, std::min(limit, a.capacity))) {
        a.capacity -= pushed;
        graph_[a.to][a.rev].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace rainbow::detail
