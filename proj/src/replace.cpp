#include "egt/replace.hpp"

#include <algorithm>
#include <numeric>

#include "egt/errors.hpp"

namespace egt {

ReplacementResult kpq_replace(const FiniteGroup& g, int p, int q,
                              ReplacePolicy policy) {
  const auto& gens = g.generators();
  const int s_count = static_cast<int>(gens.size());
  if (p < 1 || q < 1) throw ValidationError("kpq: classes must be >= 1");
  if (p + q != s_count)
    throw ValidationError("kpq: p + q = " + std::to_string(p + q) +
                          " does not match |S| = " + std::to_string(s_count) +
                          " after deduplication");

  // class_p / class_q hold generator indices (positions in S) per slot.
  std::vector<int> class_p, class_q;
  if (policy == ReplacePolicy::kLiteral) {
    for (int i = 0; i < p; ++i) class_p.push_back(i);
    for (int j = p; j < p + q; ++j) class_q.push_back(j);
  } else {
    if (p != q)
      throw ValidationError(
          "kpq matched: needs Q = P^{-1} as sets, which forces p = q (got p=" +
          std::to_string(p) + ", q=" + std::to_string(q) + ")");
    std::vector<char> placed(s_count, 0);
    for (int i = 0; i < s_count; ++i) {
      if (placed[i]) continue;
      const int inv = g.inverse(gens[i]);
      if (inv == gens[i])
        throw ValidationError("kpq matched: generator " + g.label(gens[i]) +
                              " is an involution; no class split with Q = "
                              "P^{-1} exists");
      int j = -1;
      for (int t = i + 1; t < s_count; ++t)
        if (gens[t] == inv) j = t;
      if (j < 0)
        throw ValidationError("kpq matched: generator set lost symmetry");
      class_p.push_back(i);
      class_q.push_back(j);
      placed[i] = placed[j] = 1;
    }
  }

  const int order = g.size();
  const int width = p + q;
  const int slots = order * width;
  auto slot = [width](int elem, int pos) { return elem * width + pos; };

  std::vector<int> parent(slots);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&find, &parent](int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  };

  if (policy == ReplacePolicy::kLiteral) {
    // (gamma, s_i) ~ (gamma s_i, s_{p+1}) for the first class and
    // (gamma, s_j) ~ (gamma s_j, s_1) for the second.
    for (int e = 0; e < order; ++e) {
      for (int i = 0; i < p; ++i)
        unite(slot(e, i), slot(g.mul(e, gens[i]), p));
      for (int j = p; j < width; ++j)
        unite(slot(e, j), slot(g.mul(e, gens[j]), 0));
    }
  } else {
    // (gamma, s) ~ (gamma s, s^{-1}): a perfect matching on slots.
    for (int e = 0; e < order; ++e)
      for (int t = 0; t < p; ++t) {
        const int spos = class_p[t];   // slot position of s in its block
        const int ipos = class_q[t];   // slot position of s^{-1}
        unite(slot(e, spos), slot(g.mul(e, gens[spos]), ipos));
      }
  }

  ReplacementResult res;
  res.policy = policy;
  res.class_p = class_p;
  res.class_q = class_q;

  std::vector<int> vid(slots, -1);
  int next = 0;
  for (int x = 0; x < slots; ++x) {
    int r = find(x);
    if (vid[r] < 0) vid[r] = next++;
    vid[x] = vid[r];
  }
  res.slot_labels.assign(next, {});
  for (int e = 0; e < order; ++e)
    for (int pos = 0; pos < width; ++pos)
      res.slot_labels[vid[slot(e, pos)]].push_back({e, pos});

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(order) * p * q);
  for (int e = 0; e < order; ++e)
    for (int a : class_p)
      for (int b : class_q) {
        int u = vid[slot(e, a)], v = vid[slot(e, b)];
        if (u == v)
          ++res.loop_count;
        else
          edges.emplace_back(std::min(u, v), std::max(u, v));
      }
  std::sort(edges.begin(), edges.end());
  auto uniq = std::unique(edges.begin(), edges.end());
  res.multi_count = static_cast<int>(edges.end() - uniq);
  edges.erase(uniq, edges.end());
  res.graph = build_graph(next, std::move(edges), "kpq");

  for (const auto& labels : res.slot_labels)
    ++res.merge_histogram[static_cast<int>(labels.size())];
  auto prof = degree_profile(res.graph);
  res.degree_sequence = prof.degree_sequence;
  res.regular = prof.is_regular;
  return res;
}

}  // namespace egt
