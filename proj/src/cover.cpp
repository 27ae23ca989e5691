#include "egt/cover.hpp"

#include <algorithm>
#include <numeric>

#include "egt/errors.hpp"
#include "parallel_util.hpp"

namespace egt {

std::string to_string(CoverViolation v) {
  switch (v) {
    case CoverViolation::kNone: return "none";
    case CoverViolation::kOutOfRange: return "vertex image out of range";
    case CoverViolation::kEdgeCollapsed: return "edge collapsed to a vertex";
    case CoverViolation::kEdgeNotPreserved: return "edge not preserved";
    case CoverViolation::kNeighborhoodNotInjective:
      return "neighborhood map not injective";
    case CoverViolation::kNeighborhoodNotSurjective:
      return "neighborhood map not surjective";
    case CoverViolation::kTargetNotCovered: return "target vertex has empty fiber";
  }
  return "?";
}

CoveringMap verify_cover(Graph source, Graph target, std::vector<int> vmap) {
  if (static_cast<int>(vmap.size()) != source.n)
    throw ValidationError("verify_cover: vmap must be total on the source");
  CoveringMap cov;
  cov.source = std::move(source);
  cov.target = std::move(target);
  cov.vmap = std::move(vmap);

  auto fail = [&cov](CoverViolation kind, int u, int v) {
    cov.violation = kind;
    cov.witness_u = u;
    cov.witness_v = v;
    cov.verified = false;
  };

  for (int u = 0; u < cov.source.n; ++u)
    if (cov.vmap[u] < 0 || cov.vmap[u] >= cov.target.n) {
      fail(CoverViolation::kOutOfRange, u, -1);
      return cov;
    }
  // Local bijectivity per vertex: images of N(u) are pairwise distinct, land
  // inside N(p(u)), and exhaust it.  Edge preservation is the membership
  // part of this check.
  std::vector<char> mark(cov.target.n, 0);
  for (int u = 0; u < cov.source.n; ++u) {
    auto clear = [&cov, &mark, u] {
      for (int x : cov.source.adj[u]) mark[cov.vmap[x]] = 0;
    };
    for (int w : cov.source.adj[u]) {
      if (mark[cov.vmap[w]]) {
        clear();
        fail(CoverViolation::kNeighborhoodNotInjective, u, w);
        return cov;
      }
      mark[cov.vmap[w]] = 1;
    }
    for (int w : cov.source.adj[u]) {
      if (cov.vmap[w] == cov.vmap[u]) {
        clear();
        fail(CoverViolation::kEdgeCollapsed, u, w);
        return cov;
      }
      if (!cov.target.has_edge(cov.vmap[u], cov.vmap[w])) {
        clear();
        fail(CoverViolation::kEdgeNotPreserved, u, w);
        return cov;
      }
    }
    bool onto = cov.source.adj[u].size() == cov.target.adj[cov.vmap[u]].size();
    clear();
    if (!onto) {
      fail(CoverViolation::kNeighborhoodNotSurjective, u, -1);
      return cov;
    }
  }

  cov.fibers.assign(cov.target.n, {});
  for (int u = 0; u < cov.source.n; ++u) cov.fibers[cov.vmap[u]].push_back(u);
  for (int t = 0; t < cov.target.n; ++t)
    if (cov.fibers[t].empty()) {
      fail(CoverViolation::kTargetNotCovered, -1, t);
      return cov;
    }

  cov.verified = true;
  cov.fibers_uniform = true;
  cov.fiber_size = static_cast<int>(cov.fibers[0].size());
  for (const auto& f : cov.fibers)
    if (static_cast<int>(f.size()) != cov.fiber_size) {
      cov.fibers_uniform = false;
      cov.fiber_size = 0;
      break;
    }
  return cov;
}

namespace {

// Extends a deck-map candidate alpha(basepoint) = c over a connected source;
// returns the permutation or empty when the extension is inconsistent.
std::vector<int> extend_deck_candidate(const CoveringMap& cov, int basepoint,
                                       int candidate) {
  const Graph& x = cov.source;
  std::vector<int> alpha(x.n, -1);
  alpha[basepoint] = candidate;
  std::vector<int> queue{basepoint};
  std::size_t head = 0;
  while (head < queue.size()) {
    int u = queue[head++];
    for (int v : x.adj[u]) {
      // alpha(v) is the unique neighbor of alpha(u) in the fiber of p(v)
      int image = -1;
      for (int w : x.adj[alpha[u]])
        if (cov.vmap[w] == cov.vmap[v]) {
          if (image >= 0) return {};  // cover not locally bijective here
          image = w;
        }
      if (image < 0) return {};
      if (alpha[v] < 0) {
        alpha[v] = image;
        queue.push_back(v);
      } else if (alpha[v] != image) {
        return {};
      }
    }
  }
  if (std::find(alpha.begin(), alpha.end(), -1) != alpha.end()) return {};
  if (!is_permutation(alpha, x.n)) return {};
  for (auto [u, v] : x.edges)
    if (!x.has_edge(alpha[u], alpha[v])) return {};
  for (int u = 0; u < x.n; ++u)
    if (cov.vmap[alpha[u]] != cov.vmap[u]) return {};
  return alpha;
}

}  // namespace

DeckGroup deck_group(const CoveringMap& cov, Exec exec) {
  if (!cov.verified)
    throw ValidationError("deck_group: covering map is not verified");
  if (!cov.source.connected())
    throw ValidationError("deck_group: source must be connected");

  const int basepoint = 0;
  const auto& fiber = cov.fibers[cov.vmap[basepoint]];
  std::vector<std::vector<int>> found(fiber.size());
  if (exec == Exec::kSerial) {
    for (std::size_t i = 0; i < fiber.size(); ++i)
      found[i] = extend_deck_candidate(cov, basepoint, fiber[i]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(fiber.size()); ++i)
      found[i] = extend_deck_candidate(cov, basepoint, fiber[i]);
  }

  DeckGroup deck;
  for (auto& p : found)
    if (!p.empty()) deck.perms.push_back(std::move(p));

  deck.free_action = true;
  for (const auto& p : deck.perms) {
    bool is_id = true;
    for (int v = 0; v < cov.source.n; ++v)
      if (p[v] != v) {
        is_id = false;
        break;
      }
    if (is_id) continue;
    for (int v = 0; v < cov.source.n; ++v)
      if (p[v] == v) {
        deck.free_action = false;
        break;
      }
  }

  // closure under composition and inverse (deck maps form a group; check it)
  deck.closed = true;
  std::vector<std::vector<int>> sorted = deck.perms;
  std::sort(sorted.begin(), sorted.end());
  auto member = [&sorted](const std::vector<int>& p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
  };
  for (const auto& a : deck.perms) {
    std::vector<int> inv(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) inv[a[v]] = static_cast<int>(v);
    if (!member(inv)) deck.closed = false;
    for (const auto& b : deck.perms) {
      std::vector<int> ab(a.size());
      for (std::size_t v = 0; v < a.size(); ++v) ab[v] = a[b[v]];
      if (!member(ab)) deck.closed = false;
    }
  }
  return deck;
}

GroupAction deck_action(const DeckGroup& deck, int graph_n) {
  std::vector<std::vector<int>> perms = deck.perms;
  // identity first
  std::vector<int> id(graph_n);
  std::iota(id.begin(), id.end(), 0);
  auto it = std::find(perms.begin(), perms.end(), id);
  if (it == perms.end())
    throw ValidationError("deck_action: identity missing from deck group");
  std::iter_swap(perms.begin(), it);
  return action_from_perms(std::move(perms));
}

QuotientResult quotient_graph(const Graph& g, const GroupAction& action) {
  if (action.graph_n != g.n)
    throw ValidationError("quotient: action does not match the graph");
  if (!action_respects_graph(g, action))
    throw ValidationError("quotient: action is not by graph automorphisms");

  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : action.perms)
    for (int v = 0; v < g.n; ++v) {
      int ra = find(v), rb = find(p[v]);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }

  QuotientResult out;
  out.projection.assign(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    int r = find(v);
    if (out.projection[r] < 0) {
      out.projection[r] = static_cast<int>(out.orbit_reps.size());
      out.orbit_reps.push_back(r);
    }
    out.projection[v] = out.projection[r];
  }

  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) {
    int a = out.projection[u], b = out.projection[v];
    if (a == b)
      ++out.fold_count;
    else
      edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  auto uniq = std::unique(edges.begin(), edges.end());
  out.parallel_count = static_cast<int>(edges.end() - uniq);
  edges.erase(uniq, edges.end());
  out.quotient = build_graph(static_cast<int>(out.orbit_reps.size()),
                             std::move(edges), g.name + "/orbits");

  CoveringMap check = verify_cover(g, out.quotient, out.projection);
  out.is_cover = check.verified;
  out.violation = check.violation;
  return out;
}

ReductionCover make_reduction_cover(FiniteGroup source, FiniteGroup target) {
  ReductionHom hom = reduction_hom(source, target);
  ReductionCover out;
  out.kernel = hom.kernel;

  // A reduction that collapses generators (or sends one to the identity)
  // cannot be a covering map of the two Cayley graphs; report it.
  std::vector<int> gen_images;
  for (int s : source.generators()) {
    int img = hom.map[s];
    if (img == 0)
      out.collapse_notes.push_back("generator " + source.label(s) +
                                   " reduces to the identity");
    if (std::find(gen_images.begin(), gen_images.end(), img) !=
        gen_images.end())
      out.collapse_notes.push_back("generator " + source.label(s) +
                                   " collapses onto " + target.label(img) +
                                   " with an earlier generator");
    gen_images.push_back(img);
  }
  out.degenerate = !out.collapse_notes.empty();

  CayleyGraph src_cay = cayley_graph(source);
  CayleyGraph dst_cay = cayley_graph(target);
  src_cay.graph.name = "Cay(sl mod " + std::to_string(hom.source_mod) + ")";
  dst_cay.graph.name = "Cay(sl mod " + std::to_string(hom.target_mod) + ")";
  out.cover = verify_cover(std::move(src_cay.graph), std::move(dst_cay.graph),
                           hom.map);
  out.source_group = std::move(source);
  out.target_group = std::move(target);
  return out;
}

ReductionCover quotient_cover_from_reduction(int dim, int n, int m,
                                             const Caps& caps) {
  ReductionData data = make_reduction(dim, n, m, caps);
  return make_reduction_cover(std::move(data.source), std::move(data.target));
}

}  // namespace egt
