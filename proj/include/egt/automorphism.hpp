#pragma once

#include <vector>

#include "egt/graph.hpp"

namespace egt {

// Complete automorphism list by backtracking with degree / distance-profile
// pruning; output ordered lexicographically as permutations.
std::vector<std::vector<int>> automorphism_group(const Graph& g, int cap = 16);

struct TransitivityReport {
  bool transitive = false;
  std::vector<std::vector<int>> orbits;  // of the automorphism action
};
TransitivityReport vertex_transitive(const Graph& g, int cap = 16);

struct FixedVertexReport {
  int stabilizing = 0;       // automorphisms mapping class_p + class_q to itself
  int with_fixed_vertex = 0;
  int class_preserving = 0;
  bool all_fix = false;
  std::vector<int> free_example;  // a stabilizing map without fixed vertex, if any
};

// For every automorphism stabilizing the marked complete-bipartite block:
// does it fix some vertex of the block?  One of the class sizes must be odd.
FixedVertexReport fixed_vertex_parity_check(const Graph& g,
                                            const VertexSet& class_p,
                                            const VertexSet& class_q,
                                            int cap = 16);

}  // namespace egt
