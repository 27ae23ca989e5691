#pragma once

#include <map>
#include <vector>

#include "egt/graph.hpp"
#include "egt/group.hpp"

namespace egt {

enum class ReplacePolicy { kLiteral, kMatched };

struct SlotLabel {
  int element = 0;    // group element index
  int gen_index = 0;  // 0..p+q-1 slot position; < p is class P
};

// Outcome of replacing every group element by a K_{p,q} block and gluing the
// blocks along generator edges.  The literal policy applies the two verbatim
// chaining rules and reports whatever they produce; the matched policy uses
// the pairwise rule (gamma, s) ~ (gamma s, s^-1), which needs the generator
// classes to be mutually inverse (so p = q) and yields a (p+q)-regular
// simple graph.
struct ReplacementResult {
  Graph graph;
  ReplacePolicy policy{};
  std::vector<std::vector<SlotLabel>> slot_labels;  // per merged vertex
  std::map<int, int> merge_histogram;               // slots-per-vertex -> count
  std::vector<int> degree_sequence;                 // ascending
  bool regular = false;
  int loop_count = 0;   // merged-away block edges
  int multi_count = 0;  // collapsed parallel block edges
  std::vector<int> class_p, class_q;                // generator indices per class
};

ReplacementResult kpq_replace(const FiniteGroup& g, int p, int q,
                              ReplacePolicy policy);

}  // namespace egt
