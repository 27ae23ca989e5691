#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "egt/config.hpp"
#include "egt/graph.hpp"

namespace egt {

// All-pairs edge-path distances.  Pairs in different components carry the
// explicit kUnreachable sentinel, never a large magic value.
class DistanceMatrix {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<std::int32_t> data);

  int size() const { return n_; }
  std::int32_t operator()(int u, int v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }
  bool all_finite() const;
  std::int32_t max_finite() const;  // diameter when connected

  // Restriction to a vertex subset, preserving this matrix's distances.
  DistanceMatrix restrict(const VertexSet& points) const;

 private:
  int n_ = 0;
  std::vector<std::int32_t> data_;
};

std::vector<std::int32_t> bfs_from(const Graph& g, int source);

DistanceMatrix bfs_metric(const Graph& g, Exec exec = Exec::kParallel);

int component_count(const Graph& g);

// Proper 2-coloring if one exists (graph bipartite), nullopt otherwise.
std::optional<std::vector<int>> two_coloring(const Graph& g);

}  // namespace egt
