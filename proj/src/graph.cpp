#include "egt/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "egt/errors.hpp"

namespace egt {

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::connected() const {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edges,
                  std::string name) {
  if (n < 0) throw ValidationError("vertex count must be nonnegative");
  for (auto& [u, v] : edges) {
    if (u == v)
      throw ValidationError("loop edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") is not allowed");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ValidationError("edge endpoint out of range: (" +
                            std::to_string(u) + "," + std::to_string(v) +
                            ") with n=" + std::to_string(n));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.name = std::move(name);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degree_sequence.reserve(g.n);
  for (int v = 0; v < g.n; ++v) p.degree_sequence.push_back(g.degree(v));
  std::sort(p.degree_sequence.begin(), p.degree_sequence.end());
  p.is_regular =
      g.n == 0 || p.degree_sequence.front() == p.degree_sequence.back();
  if (p.is_regular && g.n > 0) p.k = p.degree_sequence.front();
  return p;
}

VertexSet make_vertex_set(std::vector<int> vertices, int n) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  for (int v : vertices)
    if (v < 0 || v >= n)
      throw ValidationError("vertex " + std::to_string(v) +
                            " out of range for n=" + std::to_string(n));
  return vertices;
}

VertexSet boundary(const Graph& g, const VertexSet& a) {
  std::vector<char> in_a(g.n, 0);
  for (int v : a) in_a[v] = 1;
  VertexSet out;
  for (int v = 0; v < g.n; ++v) {
    if (in_a[v]) continue;
    for (int w : g.adj[v]) {
      if (in_a[w]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

int edge_cut(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::vector<char> side(g.n, 0);
  for (int v : a) side[v] = 1;
  for (int v : b) {
    if (side[v])
      throw ValidationError("edge_cut: sets overlap at vertex " +
                            std::to_string(v));
    side[v] = 2;
  }
  int cut = 0;
  for (auto [u, v] : g.edges)
    if ((side[u] == 1 && side[v] == 2) || (side[u] == 2 && side[v] == 1))
      ++cut;
  return cut;
}

Graph make_cycle(int n) {
  if (n < 3) throw ValidationError("cycle needs n >= 3 to stay simple");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, std::move(e), "C" + std::to_string(n));
}

Graph make_complete(int n) {
  if (n < 1) throw ValidationError("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, std::move(e), "K" + std::to_string(n));
}

Graph make_complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw ValidationError("bipartite classes must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
  return build_graph(p + q, std::move(e),
                     "K" + std::to_string(p) + "," + std::to_string(q));
}

Graph make_torus(int a, int b) {
  if (a < 3 || b < 3)
    throw ValidationError("torus sides must be >= 3 (smaller sides create multi-edges)");
  auto id = [b](int i, int j) { return i * b + j; };
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      e.emplace_back(id(i, j), id((i + 1) % a, j));
      e.emplace_back(id(i, j), id(i, (j + 1) % b));
    }
  return build_graph(a * b, std::move(e),
                     "C" + std::to_string(a) + "xC" + std::to_string(b));
}

Graph make_tree_ball(int k, int r) {
  if (k < 2) throw ValidationError("tree degree must be >= 2");
  if (r < 0) throw ValidationError("radius must be >= 0");
  std::vector<std::pair<int, int>> e;
  int next = 1;
  std::vector<int> frontier{0};
  for (int depth = 0; depth < r; ++depth) {
    std::vector<int> nxt;
    for (int v : frontier) {
      int children = (depth == 0) ? k : k - 1;
      for (int c = 0; c < children; ++c) {
        e.emplace_back(v, next);
        nxt.push_back(next++);
      }
    }
    frontier = std::move(nxt);
  }
  return build_graph(next, std::move(e),
                     "T" + std::to_string(k) + "r" + std::to_string(r));
}

Graph make_petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    e.emplace_back(i, 5 + i);                // spokes
  }
  return build_graph(10, std::move(e), "Petersen");
}

Graph make_path(int n) {
  if (n < 1) throw ValidationError("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, std::move(e), "P" + std::to_string(n));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> e = a.edges;
  for (auto [u, v] : b.edges) e.emplace_back(u + a.n, v + a.n);
  return build_graph(a.n + b.n, std::move(e), a.name + "+" + b.name);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_edge_list(std::istream& in, std::string name) {
  auto next_line = [&in](std::string& line) {
    while (std::getline(in, line)) {
      auto pos = line.find('#');
      if (pos != std::string::npos) line.erase(pos);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  std::string line;
  if (!next_line(line)) throw ValidationError("edge list: missing header line");
  std::istringstream hdr(line);
  long long n = -1, m = -1;
  if (!(hdr >> n >> m) || n < 0 || m < 0)
    throw ValidationError("edge list: header must be '<n> <m>'");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line))
      throw ValidationError("edge list: expected " + std::to_string(m) +
                            " edges, got " + std::to_string(i));
    std::istringstream es(line);
    long long u, v;
    if (!(es >> u >> v))
      throw ValidationError("edge list: bad edge line '" + line + "'");
    if (!(0 <= u && u < v && v < n))
      throw ValidationError("edge list: edge must satisfy 0 <= u < v < n: '" +
                            line + "'");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return build_graph(static_cast<int>(n), std::move(edges), std::move(name));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file: " + path);
  return parse_edge_list(in, path);
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write graph file: " + path);
  out << to_edge_list(g);
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n; ++v)
    if (g.adj[v].empty()) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace egt
