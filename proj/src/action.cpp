#include "egt/action.hpp"

#include <algorithm>
#include <numeric>

#include "egt/errors.hpp"

namespace egt {

bool is_permutation(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  if (!is_permutation(perm, g.n)) return false;
  for (auto [u, v] : g.edges)
    if (!g.has_edge(perm[u], perm[v])) return false;
  return true;
}

bool action_respects_graph(const Graph& g, const GroupAction& a) {
  if (a.graph_n != g.n) return false;
  return std::all_of(a.perms.begin(), a.perms.end(),
                     [&g](const auto& p) { return is_automorphism(g, p); });
}

GroupAction action_from_perms(std::vector<std::vector<int>> perms,
                              std::vector<std::string> labels) {
  if (perms.empty()) throw ValidationError("action: no permutations");
  const int n = static_cast<int>(perms[0].size());
  for (const auto& p : perms)
    if (!is_permutation(p, n))
      throw ValidationError("action: entry is not a permutation");
  GroupAction a;
  a.graph_n = n;
  a.perms = std::move(perms);
  if (labels.empty()) {
    for (std::size_t i = 0; i < a.perms.size(); ++i)
      a.labels.push_back("g" + std::to_string(i));
  } else {
    if (labels.size() != a.perms.size())
      throw ValidationError("action: label count mismatch");
    a.labels = std::move(labels);
  }
  return a;
}

GroupAction trivial_action(int graph_n) {
  std::vector<int> id(graph_n);
  std::iota(id.begin(), id.end(), 0);
  GroupAction a;
  a.graph_n = graph_n;
  a.perms.push_back(std::move(id));
  a.labels.push_back("1");
  return a;
}

GroupAction left_translation_action(const FiniteGroup& host,
                                    const CayleyGraph& cay) {
  std::vector<int> all(host.size());
  std::iota(all.begin(), all.end(), 0);
  return left_translation_action(host, cay, all);
}

GroupAction left_translation_action(const FiniteGroup& host,
                                    const CayleyGraph& cay,
                                    const std::vector<int>& acting_elements) {
  if (cay.graph.n != host.size())
    throw ValidationError(
        "left translation: graph vertex count does not match group order");

  // identity first, rest ordered by host index
  std::vector<int> acting = acting_elements;
  std::sort(acting.begin(), acting.end());
  acting.erase(std::unique(acting.begin(), acting.end()), acting.end());
  if (acting.empty() || acting.front() != 0)
    throw ValidationError("left translation: acting set must contain the identity");
  {
    std::vector<char> in(host.size(), 0);
    for (int e : acting) {
      if (e < 0 || e >= host.size())
        throw ValidationError("left translation: element index out of range");
      in[e] = 1;
    }
    for (int e : acting) {
      if (!in[host.inverse(e)])
        throw ValidationError("left translation: acting set not closed under inverse");
      for (int f : acting)
        if (!in[host.mul(e, f)])
          throw ValidationError("left translation: acting set not closed under multiplication");
    }
  }

  GroupAction a;
  a.graph_n = cay.graph.n;
  a.perms.reserve(acting.size());
  a.labels.reserve(acting.size());
  for (int e : acting) {
    std::vector<int> p(host.size());
    for (int v = 0; v < host.size(); ++v) p[v] = host.mul(e, v);
    a.perms.push_back(std::move(p));
    a.labels.push_back(host.label(e));
  }
  return a;
}

OrbitData orbits_and_stabilizers(const GroupAction& a) {
  const int n = a.graph_n;
  OrbitData out;
  out.orbit_of.assign(n, -1);
  out.stabilizer_size.assign(n, 0);

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : a.perms)
    for (int v = 0; v < n; ++v) {
      int ra = find(v), rb = find(p[v]);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (out.orbit_of[r] < 0) {
      out.orbit_of[r] = static_cast<int>(out.representatives.size());
      out.representatives.push_back(r);
      out.orbits.emplace_back();
    }
    out.orbit_of[v] = out.orbit_of[r];
    out.orbits[out.orbit_of[v]].push_back(v);
  }
  for (const auto& p : a.perms)
    for (int v = 0; v < n; ++v)
      if (p[v] == v) ++out.stabilizer_size[v];

  out.free = true;
  for (int v = 0; v < n; ++v)
    if (out.stabilizer_size[v] != 1) out.free = false;
  // |orbit| * |stabilizer| = |G| must hold for a group action
  for (int v = 0; v < n; ++v) {
    if (static_cast<long long>(out.orbits[out.orbit_of[v]].size()) *
            out.stabilizer_size[v] !=
        static_cast<long long>(a.size()))
      throw ValidationError(
          "orbit-stabilizer mismatch: permutations do not form a group action");
  }
  out.transitive = out.representatives.size() == 1;
  return out;
}

}  // namespace egt
