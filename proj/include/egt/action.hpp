#pragma once

#include <string>
#include <vector>

#include "egt/graph.hpp"
#include "egt/group.hpp"

namespace egt {

// A finite group acting on graph vertices, stored as one permutation per
// acting element (identity first).  Immutable after construction.
struct GroupAction {
  int graph_n = 0;
  std::vector<std::vector<int>> perms;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(perms.size()); }
  int apply(int element, int vertex) const { return perms[element][vertex]; }
};

bool is_permutation(const std::vector<int>& p, int n);
bool is_automorphism(const Graph& g, const std::vector<int>& perm);
bool action_respects_graph(const Graph& g, const GroupAction& a);

GroupAction action_from_perms(std::vector<std::vector<int>> perms,
                              std::vector<std::string> labels = {});
GroupAction trivial_action(int graph_n);

// gamma . v = index(gamma * element(v)) on the group's own Cayley graph.
GroupAction left_translation_action(const FiniteGroup& host,
                                    const CayleyGraph& cay);
// Same, but only the listed elements act; they must form a subgroup of host.
GroupAction left_translation_action(const FiniteGroup& host,
                                    const CayleyGraph& cay,
                                    const std::vector<int>& acting_elements);

struct OrbitData {
  std::vector<int> representatives;        // smallest vertex per orbit, ascending
  std::vector<int> orbit_of;               // vertex -> orbit id
  std::vector<std::vector<int>> orbits;    // sorted members per orbit
  std::vector<int> stabilizer_size;        // per vertex
  bool free = false;                       // only the identity fixes a vertex
  bool transitive = false;
};
OrbitData orbits_and_stabilizers(const GroupAction& a);

}  // namespace egt
