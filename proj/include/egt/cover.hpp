#pragma once

#include <string>
#include <vector>

#include "egt/action.hpp"
#include "egt/config.hpp"
#include "egt/graph.hpp"
#include "egt/group.hpp"

namespace egt {

enum class CoverViolation {
  kNone,
  kOutOfRange,
  kEdgeCollapsed,
  kEdgeNotPreserved,
  kNeighborhoodNotInjective,
  kNeighborhoodNotSurjective,
  kTargetNotCovered,
};
std::string to_string(CoverViolation v);

struct CoveringMap {
  Graph source, target;
  std::vector<int> vmap;  // source vertex -> target vertex
  bool verified = false;
  CoverViolation violation = CoverViolation::kNone;
  int witness_u = -1, witness_v = -1;  // vertices involved in the violation
  std::vector<std::vector<int>> fibers;  // target vertex -> source vertices
  bool fibers_uniform = false;
  int fiber_size = 0;  // meaningful when fibers_uniform
};

// Checks the covering axioms; violations are reported in the returned value,
// not thrown.
CoveringMap verify_cover(Graph source, Graph target, std::vector<int> vmap);

struct DeckGroup {
  std::vector<std::vector<int>> perms;  // identity first
  bool free_action = false;             // no non-identity fixed point
  bool closed = false;                  // closed under composition + inverse
};

// Full deck-transformation enumeration by the basepoint method: a deck map
// of a connected cover is determined by the image of one vertex inside its
// fiber; each candidate is grown by synchronized BFS.
DeckGroup deck_group(const CoveringMap& cov, Exec exec = Exec::kParallel);

GroupAction deck_action(const DeckGroup& deck, int graph_n);

struct QuotientResult {
  Graph quotient;
  std::vector<int> projection;  // vertex -> orbit id
  std::vector<int> orbit_reps;
  bool is_cover = false;
  CoverViolation violation = CoverViolation::kNone;
  int fold_count = 0;      // orbit-internal edge instances dropped
  int parallel_count = 0;  // extra parallel crossings collapsed
};
QuotientResult quotient_graph(const Graph& g, const GroupAction& action);

struct ReductionCover {
  CoveringMap cover;
  bool degenerate = false;                // generator images collapse / hit 1
  std::vector<std::string> collapse_notes;
  FiniteGroup source_group, target_group;
  std::vector<int> kernel;  // source elements over the identity
};

// Cay(SL_dim(Z/n)) -> Cay(SL_dim(Z/m)) induced by entrywise reduction,
// verified honestly (degenerate reductions still return their outcome).
ReductionCover quotient_cover_from_reduction(int dim, int n, int m,
                                             const Caps& caps = {});
ReductionCover make_reduction_cover(FiniteGroup source, FiniteGroup target);

}  // namespace egt
