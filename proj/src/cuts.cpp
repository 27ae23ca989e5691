#include "egt/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "egt/errors.hpp"
#include "egt/spectra.hpp"
#include "parallel_util.hpp"

namespace egt {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> m(g.n, 0);
  for (auto [u, v] : g.edges) {
    m[u] |= 1u << v;
    m[v] |= 1u << u;
  }
  return m;
}

VertexSet mask_to_set(std::uint32_t mask, int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1u) s.push_back(v);
  return s;
}

bool set_lex_less(std::uint32_t a, std::uint32_t b, int n) {
  VertexSet va = mask_to_set(a, n), vb = mask_to_set(b, n);
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(),
                                      vb.end());
}

// Candidate minimum of an exact fraction num/den with a subset witness.
struct FractionBest {
  long long num = 0, den = 0;
  std::uint32_t mask = 0;
  bool set = false;

  // strictly better, or equal value with lexicographically smaller witness
  bool better_than(const FractionBest& o, int n) const {
    if (!set) return false;
    if (!o.set) return true;
    const long long lhs = num * o.den, rhs = o.num * den;
    if (lhs != rhs) return lhs < rhs;
    return set_lex_less(mask, o.mask, n);
  }
  void consider(long long n2, long long d2, std::uint32_t m2, int n) {
    FractionBest cand{n2, d2, m2, true};
    if (cand.better_than(*this, n)) *this = cand;
  }
};

template <typename Body>
FractionBest scan_masks(std::uint64_t count, int n, Exec exec, Body&& body) {
  if (exec == Exec::kSerial) {
    FractionBest best;
    for (std::uint64_t i = 0; i < count; ++i) body(i, best);
    return best;
  }
  std::vector<FractionBest> bests(detail::max_threads());
#pragma omp parallel
  {
    FractionBest local;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
      body(static_cast<std::uint64_t>(i), local);
    bests[detail::thread_id()] = local;
  }
  FractionBest best;
  for (const auto& b : bests)
    if (b.better_than(best, n)) best = b;
  return best;
}

}  // namespace

CheegerReport cheeger_exact(const Graph& g, const Caps& caps, Exec exec) {
  if (g.n < 2) throw ValidationError("cheeger: need at least 2 vertices");
  if (!g.connected()) throw ValidationError("cheeger: graph must be connected");
  if (g.n > caps.cut_exact_max_n)
    throw ResourceError("cheeger_exact: n=" + std::to_string(g.n) +
                        " exceeds exhaustive cap " +
                        std::to_string(caps.cut_exact_max_n) +
                        "; use cheeger_heuristic");

  const auto adj = adjacency_masks(g);
  const int n = g.n;
  // Vertex 0 stays in A, so each bipartition is visited once; the all-in-A
  // mask is excluded to keep B nonempty.
  const std::uint64_t count = (1ull << (n - 1)) - 1;
  auto best = scan_masks(count, n, exec,
                         [&adj, n](std::uint64_t i, FractionBest& acc) {
                           const std::uint32_t a =
                               (static_cast<std::uint32_t>(i) << 1) | 1u;
                           const int sz = std::popcount(a);
                           long long cut = 0;
                           for (int v = 0; v < n; ++v)
                             if (a >> v & 1u)
                               cut += std::popcount(adj[v] & ~a);
                           acc.consider(cut, std::min(sz, n - sz), a, n);
                         });

  CheegerReport rep;
  rep.cut = best.num;
  rep.min_side = static_cast<int>(best.den);
  rep.h = static_cast<double>(best.num) / static_cast<double>(best.den);
  rep.witness_a = mask_to_set(best.mask, n);
  rep.witness_b = mask_to_set(~best.mask & ((1u << n) - 1u), n);
  rep.method = "exact";
  return rep;
}

CheegerReport cheeger_heuristic(const Graph& g, const RunConfig& cfg) {
  if (g.n < 2) throw ValidationError("cheeger: need at least 2 vertices");
  if (!g.connected()) throw ValidationError("cheeger: graph must be connected");
  auto [lambda, vec] = lambda_eigenpair(g, cfg);
  (void)lambda;

  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&vec](int a, int b) {
    if (vec[a] != vec[b]) return vec[a] < vec[b];
    return a < b;
  });

  std::vector<char> in_a(g.n, 0);
  long long cut = 0;
  long long best_num = -1, best_den = 1;
  int best_prefix = 0;
  for (int i = 0; i + 1 < g.n; ++i) {
    const int v = order[i];
    long long inside = 0;
    for (int w : g.adj[v]) inside += in_a[w];
    cut += g.degree(v) - 2 * inside;
    in_a[v] = 1;
    const long long den = std::min(i + 1, g.n - (i + 1));
    if (best_num < 0 || cut * best_den < best_num * den) {
      best_num = cut;
      best_den = den;
      best_prefix = i + 1;
    }
  }

  CheegerReport rep;
  rep.cut = best_num;
  rep.min_side = static_cast<int>(best_den);
  rep.h = static_cast<double>(best_num) / static_cast<double>(best_den);
  rep.witness_a.assign(order.begin(), order.begin() + best_prefix);
  std::sort(rep.witness_a.begin(), rep.witness_a.end());
  rep.witness_b.assign(order.begin() + best_prefix, order.end());
  std::sort(rep.witness_b.begin(), rep.witness_b.end());
  rep.method = "heuristic-upper-bound";
  return rep;
}

ExpanderReport expander_constant(const Graph& g, const Caps& caps, Exec exec) {
  if (g.n < 2) throw ValidationError("expander constant: need at least 2 vertices");
  if (g.n > caps.cut_exact_max_n)
    throw ResourceError("expander_constant: n=" + std::to_string(g.n) +
                        " exceeds exhaustive cap " +
                        std::to_string(caps.cut_exact_max_n));

  const auto adj = adjacency_masks(g);
  const int n = g.n;
  // ratio = |bd(A)| / ((1 - |A|/n)|A|) = |bd(A)| * n / ((n - |A|) |A|)
  const std::uint64_t count = (1ull << n) - 2;
  auto best = scan_masks(count, n, exec,
                         [&adj, n](std::uint64_t i, FractionBest& acc) {
                           const std::uint32_t a =
                               static_cast<std::uint32_t>(i + 1);
                           const int sz = std::popcount(a);
                           long long bd = 0;
                           for (int v = 0; v < n; ++v)
                             if (!(a >> v & 1u) && (adj[v] & a)) ++bd;
                           acc.consider(bd * n,
                                        static_cast<long long>(n - sz) * sz, a,
                                        n);
                         });

  ExpanderReport rep;
  rep.c = static_cast<double>(best.num) / static_cast<double>(best.den);
  rep.witness = mask_to_set(best.mask, n);
  rep.boundary = best.num / n;
  rep.n = n;
  rep.d = degree_profile(g).degree_sequence.back();
  return rep;
}

namespace {

long long subset_count_upto(int n, int max_size, long long cap) {
  long long total = 0, binom = 1;
  for (int s = 1; s <= max_size; ++s) {
    binom = binom * (n - s + 1) / s;
    total += binom;
    if (total > cap || binom < 0) return cap + 1;
  }
  return total;
}

struct SetBest {
  long long num = 0, den = 0;
  VertexSet witness;
  bool set = false;

  bool better_than(const SetBest& o) const {
    if (!set) return false;
    if (!o.set) return true;
    const long long lhs = num * o.den, rhs = o.num * den;
    if (lhs != rhs) return lhs < rhs;
    return std::lexicographical_compare(witness.begin(), witness.end(),
                                        o.witness.begin(), o.witness.end());
  }
  void consider(long long n2, long long d2, const VertexSet& w) {
    SetBest cand{n2, d2, w, true};
    if (cand.better_than(*this)) *this = cand;
  }
};

long long boundary_size(const Graph& g, const std::vector<char>& in) {
  long long bd = 0;
  for (int v = 0; v < g.n; ++v) {
    if (in[v]) continue;
    for (int w : g.adj[v])
      if (in[w]) {
        ++bd;
        break;
      }
  }
  return bd;
}

SetBest folner_exact(const Graph& g, int max_size) {
  SetBest best;
  std::vector<int> comb;
  std::vector<char> in(g.n, 0);
  // lexicographic combination walk per subset size
  for (int s = 1; s <= max_size; ++s) {
    comb.resize(s);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      std::fill(in.begin(), in.end(), 0);
      for (int v : comb) in[v] = 1;
      best.consider(boundary_size(g, in), s, comb);
      int i = s - 1;
      while (i >= 0 && comb[i] == g.n - s + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return best;
}

SetBest folner_greedy_from(const Graph& g, int start, int max_size) {
  SetBest best;
  std::vector<char> in(g.n, 0);
  VertexSet f{start};
  in[start] = 1;
  best.consider(boundary_size(g, in), 1, f);
  while (static_cast<int>(f.size()) < max_size) {
    // candidates are the current boundary vertices; pick the one whose
    // addition leaves the smallest boundary, smallest index on ties
    int pick = -1;
    long long pick_bd = 0;
    for (int v = 0; v < g.n; ++v) {
      if (in[v]) continue;
      bool touches = false;
      for (int w : g.adj[v])
        if (in[w]) {
          touches = true;
          break;
        }
      if (!touches) continue;
      in[v] = 1;
      long long bd = boundary_size(g, in);
      in[v] = 0;
      if (pick < 0 || bd < pick_bd) {
        pick = v;
        pick_bd = bd;
      }
    }
    if (pick < 0) break;  // component exhausted
    in[pick] = 1;
    f.insert(std::lower_bound(f.begin(), f.end(), pick), pick);
    best.consider(pick_bd, static_cast<long long>(f.size()), f);
  }
  return best;
}

}  // namespace

FolnerReport folner_ratio(const Graph& g, int max_size, FolnerMode mode,
                          const Caps& caps, Exec exec) {
  if (max_size < 1 || max_size > g.n / 2)
    throw ValidationError("folner: need 1 <= max_size <= n/2");

  bool exact;
  switch (mode) {
    case FolnerMode::kExact:
      exact = true;
      break;
    case FolnerMode::kGreedy:
      exact = false;
      break;
    default:
      exact = subset_count_upto(g.n, max_size, caps.folner_exhaustive) <=
              caps.folner_exhaustive;
  }

  SetBest best;
  if (exact) {
    if (subset_count_upto(g.n, max_size, caps.folner_exhaustive) >
        caps.folner_exhaustive)
      throw ResourceError("folner: exact enumeration exceeds cap " +
                          std::to_string(caps.folner_exhaustive));
    best = folner_exact(g, max_size);
  } else if (exec == Exec::kSerial) {
    for (int start = 0; start < g.n; ++start) {
      SetBest local = folner_greedy_from(g, start, max_size);
      if (local.better_than(best)) best = local;
    }
  } else {
    std::vector<SetBest> bests(detail::max_threads());
#pragma omp parallel
    {
      SetBest local;
#pragma omp for schedule(dynamic)
      for (int start = 0; start < g.n; ++start) {
        SetBest b = folner_greedy_from(g, start, max_size);
        if (b.better_than(local)) local = b;
      }
      bests[detail::thread_id()] = local;
    }
    for (const auto& b : bests)
      if (b.better_than(best)) best = b;
  }

  FolnerReport rep;
  rep.ratio = static_cast<double>(best.num) / static_cast<double>(best.den);
  rep.boundary = best.num;
  rep.witness = best.witness;
  rep.mode = exact ? "exact" : "greedy";
  return rep;
}

}  // namespace egt
