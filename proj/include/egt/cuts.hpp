#pragma once

#include <string>
#include <vector>

#include "egt/config.hpp"
#include "egt/graph.hpp"

namespace egt {

struct CheegerReport {
  double h = 0.0;
  long long cut = 0;   // exact fraction h = cut / min_side
  int min_side = 0;
  VertexSet witness_a, witness_b;
  std::string method;  // "exact" | "heuristic-upper-bound"
};

// Exhaustive minimum of |E(A,B)| / min(|A|,|B|) over bipartitions; n is
// capped, ties broken by the lexicographically smallest witness set.
CheegerReport cheeger_exact(const Graph& g, const Caps& caps = {},
                            Exec exec = Exec::kParallel);

// Sweep cut along the lambda eigenvector; an upper bound on h.
CheegerReport cheeger_heuristic(const Graph& g, const RunConfig& cfg = {});

struct ExpanderReport {
  double c = 0.0;
  long long boundary = 0;  // |bd(A)| for the witness
  VertexSet witness;
  int n = 0, d = 0;
};

// Exhaustive minimum of |bd(A)| / ((1 - |A|/n) |A|) over nonempty proper
// subsets (not just partitions).
ExpanderReport expander_constant(const Graph& g, const Caps& caps = {},
                                 Exec exec = Exec::kParallel);

enum class FolnerMode { kAuto, kExact, kGreedy };

struct FolnerReport {
  double ratio = 0.0;
  long long boundary = 0;  // exact fraction ratio = boundary / |witness|
  VertexSet witness;
  std::string mode;  // "exact" | "greedy"
};

// Minimum of |bd(F)| / |F| over nonempty F with |F| <= max_size.  Exact
// enumeration when the subset count fits the cap, greedy ball-growing from
// every start vertex otherwise.
FolnerReport folner_ratio(const Graph& g, int max_size,
                          FolnerMode mode = FolnerMode::kAuto,
                          const Caps& caps = {}, Exec exec = Exec::kParallel);

}  // namespace egt
