#include "egt/automorphism.hpp"

#include <algorithm>
#include <numeric>

#include "egt/errors.hpp"
#include "egt/metric.hpp"

namespace egt {

namespace {

struct Backtracker {
  const Graph& g;
  std::vector<std::vector<char>> compatible;  // invariant classes agree
  std::vector<int> map;
  std::vector<char> used;
  std::vector<std::vector<int>> out;

  explicit Backtracker(const Graph& graph) : g(graph) {
    // per-vertex invariant: degree, sorted neighbor degrees, sorted distances
    auto dm = bfs_metric(g, Exec::kSerial);
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<int>& s = sig[v];
      s.push_back(g.degree(v));
      std::vector<int> nd;
      for (int w : g.adj[v]) nd.push_back(g.degree(w));
      std::sort(nd.begin(), nd.end());
      s.insert(s.end(), nd.begin(), nd.end());
      std::vector<int> dist;
      for (int w = 0; w < g.n; ++w) dist.push_back(dm(v, w));
      std::sort(dist.begin(), dist.end());
      s.insert(s.end(), dist.begin(), dist.end());
    }
    compatible.assign(g.n, std::vector<char>(g.n, 0));
    for (int v = 0; v < g.n; ++v)
      for (int w = 0; w < g.n; ++w) compatible[v][w] = sig[v] == sig[w];
    map.assign(g.n, -1);
    used.assign(g.n, 0);
  }

  void search(int v) {
    if (v == g.n) {
      out.push_back(map);
      return;
    }
    for (int cand = 0; cand < g.n; ++cand) {
      if (used[cand] || !compatible[v][cand]) continue;
      bool ok = true;
      for (int w : g.adj[v]) {
        if (w < v && !g.has_edge(cand, map[w])) {
          ok = false;
          break;
        }
      }
      // mapped non-neighbors must stay non-neighbors
      if (ok) {
        for (int w = 0; w < v && ok; ++w)
          if (!g.has_edge(v, w) && g.has_edge(cand, map[w])) ok = false;
      }
      if (!ok) continue;
      map[v] = cand;
      used[cand] = 1;
      search(v + 1);
      used[cand] = 0;
      map[v] = -1;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> automorphism_group(const Graph& g, int cap) {
  if (g.n > cap)
    throw ResourceError("automorphism_group: n=" + std::to_string(g.n) +
                        " exceeds cap " + std::to_string(cap));
  if (g.n == 0) return {{}};
  Backtracker bt(g);
  bt.search(0);
  return std::move(bt.out);  // lexicographic by construction
}

TransitivityReport vertex_transitive(const Graph& g, int cap) {
  auto autos = automorphism_group(g, cap);
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : autos)
    for (int v = 0; v < g.n; ++v) {
      int ra = find(v), rb = find(p[v]);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  TransitivityReport rep;
  std::vector<int> orbit_id(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    int r = find(v);
    if (orbit_id[r] < 0) {
      orbit_id[r] = static_cast<int>(rep.orbits.size());
      rep.orbits.emplace_back();
    }
    rep.orbits[orbit_id[r]].push_back(v);
  }
  rep.transitive = rep.orbits.size() == 1;
  return rep;
}

FixedVertexReport fixed_vertex_parity_check(const Graph& g,
                                            const VertexSet& class_p,
                                            const VertexSet& class_q,
                                            int cap) {
  if (class_p.empty() || class_q.empty())
    throw ValidationError("parity check: both classes must be nonempty");
  if (class_p.size() % 2 == 0 && class_q.size() % 2 == 0)
    throw ValidationError("parity check: one class size must be odd");

  std::vector<char> in_block(g.n, 0), in_p(g.n, 0);
  for (int v : class_p) {
    in_block[v] = 1;
    in_p[v] = 1;
  }
  for (int v : class_q) {
    if (in_block[v]) throw ValidationError("parity check: classes overlap");
    in_block[v] = 1;
  }

  FixedVertexReport rep;
  for (const auto& a : automorphism_group(g, cap)) {
    bool stabilizes = true;
    for (int v = 0; v < g.n; ++v)
      if (in_block[v] != in_block[a[v]]) {
        stabilizes = false;
        break;
      }
    if (!stabilizes) continue;
    ++rep.stabilizing;
    bool preserves_classes = true;
    bool fixes = false;
    for (int v = 0; v < g.n; ++v) {
      if (!in_block[v]) continue;
      if (in_p[v] != in_p[a[v]]) preserves_classes = false;
      if (a[v] == v) fixes = true;
    }
    if (preserves_classes) ++rep.class_preserving;
    if (fixes)
      ++rep.with_fixed_vertex;
    else if (rep.free_example.empty())
      rep.free_example = a;
  }
  rep.all_fix = rep.stabilizing > 0 && rep.with_fixed_vertex == rep.stabilizing;
  return rep;
}

}  // namespace egt
