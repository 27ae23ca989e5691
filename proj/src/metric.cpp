#include "egt/metric.hpp"

#include <algorithm>
#include <queue>

#include "egt/errors.hpp"

namespace egt {

DistanceMatrix::DistanceMatrix(int n, std::vector<std::int32_t> data)
    : n_(n), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(n) * n)
    throw ValidationError("distance matrix: size mismatch");
}

bool DistanceMatrix::all_finite() const {
  return std::find(data_.begin(), data_.end(), kUnreachable) == data_.end();
}

std::int32_t DistanceMatrix::max_finite() const {
  std::int32_t best = 0;
  for (auto d : data_) best = std::max(best, d);
  return best;
}

DistanceMatrix DistanceMatrix::restrict(const VertexSet& points) const {
  const int m = static_cast<int>(points.size());
  std::vector<std::int32_t> sub(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      sub[static_cast<std::size_t>(i) * m + j] = (*this)(points[i], points[j]);
  return DistanceMatrix(m, std::move(sub));
}

std::vector<std::int32_t> bfs_from(const Graph& g, int source) {
  std::vector<std::int32_t> dist(g.n, DistanceMatrix::kUnreachable);
  dist[source] = 0;
  std::vector<int> frontier{source};
  std::vector<int> next;
  std::int32_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (int u : frontier)
      for (int w : g.adj[u])
        if (dist[w] == DistanceMatrix::kUnreachable) {
          dist[w] = depth;
          next.push_back(w);
        }
    std::swap(frontier, next);
  }
  return dist;
}

DistanceMatrix bfs_metric(const Graph& g, Exec exec) {
  std::vector<std::int32_t> data(static_cast<std::size_t>(g.n) * g.n,
                                 DistanceMatrix::kUnreachable);
  if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (int s = 0; s < g.n; ++s) {
      auto row = bfs_from(g, s);
      std::copy(row.begin(), row.end(),
                data.begin() + static_cast<std::size_t>(s) * g.n);
    }
  } else {
    for (int s = 0; s < g.n; ++s) {
      auto row = bfs_from(g, s);
      std::copy(row.begin(), row.end(),
                data.begin() + static_cast<std::size_t>(s) * g.n);
    }
  }
  return DistanceMatrix(g.n, std::move(data));
}

int component_count(const Graph& g) {
  std::vector<char> seen(g.n, 0);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return count;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.n, -1);
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj[u]) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace egt
