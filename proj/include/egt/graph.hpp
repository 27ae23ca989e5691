#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace egt {

// Sorted list of distinct vertex indices.
using VertexSet = std::vector<int>;

// Finite simple undirected graph.  Immutable after construction; all
// operations on it are pure functions.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique
  std::vector<std::vector<int>> adj;       // sorted neighbor lists
  std::string name;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
  bool connected() const;
};

// Normalizes pairs to u < v, deduplicates, rejects loops and out-of-range
// endpoints.
Graph build_graph(int n, std::vector<std::pair<int, int>> edges,
                  std::string name = "");

struct DegreeProfile {
  bool is_regular = false;
  std::optional<int> k;            // set only when regular
  std::vector<int> degree_sequence;  // ascending
};
DegreeProfile degree_profile(const Graph& g);

// Validates range and distinctness, returns the sorted set.
VertexSet make_vertex_set(std::vector<int> vertices, int n);

// Vertices outside `a` with a neighbor in `a`.
VertexSet boundary(const Graph& g, const VertexSet& a);

// Number of edges with one endpoint in each set; the sets must be disjoint.
int edge_cut(const Graph& g, const VertexSet& a, const VertexSet& b);

Graph make_cycle(int n);                       // n >= 3
Graph make_complete(int n);
Graph make_complete_bipartite(int p, int q);
Graph make_torus(int a, int b);                // C_a x C_b, sides >= 3
Graph make_tree_ball(int k, int r);            // radius-r ball in the k-regular tree
Graph make_petersen();
Graph make_path(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

// Canonical edge-list text: line 1 is "n m", then m lines "u v" with
// 0 <= u < v < n; '#' starts a comment; LF line endings.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::istream& in, std::string name = "");
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

std::string to_dot(const Graph& g);

}  // namespace egt
