#pragma once

#include <optional>
#include <string>
#include <vector>

#include "egt/config.hpp"
#include "egt/cover.hpp"
#include "egt/cuts.hpp"
#include "egt/graph.hpp"

namespace egt {

struct FamilyMember {
  Graph graph;
  std::string name;
  // Covering map onto this member from the next tower level (absent for the
  // top member and for families without covers).
  std::optional<CoveringMap> cover;
  std::vector<std::string> notes;
};

struct GraphFamily {
  std::vector<FamilyMember> members;
  std::string provenance;
};

// Cay(SL_dim(Z/p^k)) for k = 1..depth with verified reduction covers
// between consecutive levels.
GraphFamily build_tower(int dim, int prime, int depth, const Caps& caps = {});

// Cay(SL_dim(Z/p)) per prime; no covers.
GraphFamily build_prime_family(int dim, const std::vector<int>& primes,
                               const Caps& caps = {});

GraphFamily family_from_graphs(std::vector<Graph> graphs,
                               std::string provenance = "manifest");

enum class CheegerMode { kNone, kAuto, kExact, kHeuristic };

struct FamilyRow {
  std::string name;
  int n = 0, k = 0;
  double lambda = 0, gap = 0;
  bool has_h = false;
  double h_lo = 0, h_hi = 0;  // equal when exact
  bool h_exact = false;
  std::optional<double> c;
  bool has_cover = false, cover_verified = false;
};

struct FamilyReport {
  std::vector<FamilyRow> rows;
  double eps1 = 0, eps2 = 0;
  std::string cheeger_mode;
  double sup_lambda = 0, min_gap = 0;
  bool has_h = false;
  double inf_h_lo = 0, inf_h_hi = 0;
  bool same_degree = true;
  bool uniform_gap_verdict = false;          // min gap >= eps2
  std::optional<bool> cheeger_verdict;       // h >= eps1 for all members;
                                             // nullopt when indeterminate
  bool tau_verdict = false;                  // uniform gap + verified covers
  std::string tau_note;
};

FamilyReport analyze_family(const GraphFamily& fam, double eps1, double eps2,
                            CheegerMode mode, const RunConfig& cfg = {});

struct FolnerProbeRow {
  int member_index = -1;
  int requested_size = 0;
  VertexSet candidate;   // subset of the cover's source
  bool injective = false;
  bool size_ok = false;  // |F| <= |V(target)| / 2
  bool has_bound = false;
  double bound = 0;      // |bd F| / |F| in the source, when applicable
  std::string note;
};

// Checks a candidate Folner set against a covering map: injectivity of the
// restriction plus the size condition yields a Cheeger upper bound for the
// target.
FolnerProbeRow probe_folner_candidate(const CoveringMap& cov,
                                      const VertexSet& candidate);

// Candidates come from folner_ratio witnesses on each cover's source.
std::vector<FolnerProbeRow> folner_injection_probe(const GraphFamily& fam,
                                                   const std::vector<int>& sizes,
                                                   const RunConfig& cfg = {});

}  // namespace egt
