#include "egt/family.hpp"

#include <algorithm>
#include <cmath>

#include "egt/errors.hpp"
#include "egt/spectra.hpp"
#include "parallel_util.hpp"

namespace egt {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// |SL_d(Z/p^k)| = p^{(d^2-1)(k-1)} * p^{d(d-1)/2} * prod_{i=2..d} (p^i - 1),
// saturating at cap+1 to avoid overflow.
long long predicted_sl_order(int dim, int prime, int level, long long cap) {
  long double order = 1.0L;
  for (int e = 0; e < dim * (dim - 1) / 2; ++e) order *= prime;
  long double pw = prime;
  for (int i = 2; i <= dim; ++i) {
    pw *= prime;  // p^i
    order *= pw - 1;
  }
  for (int e = 0; e < (dim * dim - 1) * (level - 1); ++e) order *= prime;
  if (order > static_cast<long double>(cap)) return cap + 1;
  return static_cast<long long>(order);
}

}  // namespace

GraphFamily build_tower(int dim, int prime, int depth, const Caps& caps) {
  if (!is_prime(prime))
    throw ValidationError("tower: " + std::to_string(prime) + " is not prime");
  if (depth < 1) throw ValidationError("tower: depth must be >= 1");

  // Predicted orders catch an infeasible level before enumerating it:
  // |SL_d(Z/p^k)| = p^{(d^2-1)(k-1)} |SL_d(Z/p)|.
  std::vector<long long> mods{1};
  for (int k = 1; k <= depth; ++k) {
    long long m = mods.back() * prime;
    if (m > (1 << 20))
      throw ResourceError("tower: modulus overflow at level " +
                          std::to_string(k));
    mods.push_back(m);
  }

  std::vector<FiniteGroup> groups;
  for (int k = 1; k <= depth; ++k) {
    if (predicted_sl_order(dim, prime, k, caps.group_order) > caps.group_order)
      throw ResourceError("tower: level " + std::to_string(k) + " (modulus " +
                          std::to_string(mods[k]) +
                          ") has predicted order above the group order cap " +
                          std::to_string(caps.group_order));
    try {
      groups.push_back(FiniteGroup::enumerate(
          sl_generators(dim, static_cast<int>(mods[k])), caps.group_order));
    } catch (const ResourceError&) {
      throw ResourceError("tower: level " + std::to_string(k) + " (modulus " +
                          std::to_string(mods[k]) +
                          ") exceeds the group order cap");
    }
  }

  GraphFamily fam;
  fam.provenance = "tower dim=" + std::to_string(dim) +
                   " prime=" + std::to_string(prime) +
                   " depth=" + std::to_string(depth);
  for (int k = 0; k < depth; ++k) {
    FamilyMember m;
    CayleyGraph cay = cayley_graph(groups[k]);
    m.name = "Cay(sl:" + std::to_string(dim) + ":" + std::to_string(mods[k + 1]) + ")";
    m.graph = std::move(cay.graph);
    m.graph.name = m.name;
    fam.members.push_back(std::move(m));
  }
  for (int k = 0; k + 1 < depth; ++k) {
    ReductionCover rc = make_reduction_cover(groups[k + 1], groups[k]);
    for (const auto& note : rc.collapse_notes)
      fam.members[k].notes.push_back(note);
    fam.members[k].cover = std::move(rc.cover);
  }
  return fam;
}

GraphFamily build_prime_family(int dim, const std::vector<int>& primes,
                               const Caps& caps) {
  GraphFamily fam;
  fam.provenance = "primes dim=" + std::to_string(dim);
  for (int p : primes) {
    if (!is_prime(p))
      throw ValidationError("prime family: " + std::to_string(p) +
                            " is not prime");
    FiniteGroup g = FiniteGroup::enumerate(sl_generators(dim, p), caps.group_order);
    FamilyMember m;
    CayleyGraph cay = cayley_graph(g);
    m.name = "Cay(sl:" + std::to_string(dim) + ":" + std::to_string(p) + ")";
    m.graph = std::move(cay.graph);
    m.graph.name = m.name;
    fam.members.push_back(std::move(m));
  }
  return fam;
}

GraphFamily family_from_graphs(std::vector<Graph> graphs,
                               std::string provenance) {
  GraphFamily fam;
  fam.provenance = std::move(provenance);
  for (auto& g : graphs) {
    FamilyMember m;
    m.name = g.name.empty() ? "member" + std::to_string(fam.members.size())
                            : g.name;
    m.graph = std::move(g);
    fam.members.push_back(std::move(m));
  }
  return fam;
}

FamilyReport analyze_family(const GraphFamily& fam, double eps1, double eps2,
                            CheegerMode mode, const RunConfig& cfg) {
  FamilyReport rep;
  rep.eps1 = eps1;
  rep.eps2 = eps2;
  switch (mode) {
    case CheegerMode::kNone: rep.cheeger_mode = "none"; break;
    case CheegerMode::kAuto: rep.cheeger_mode = "auto"; break;
    case CheegerMode::kExact: rep.cheeger_mode = "exact"; break;
    case CheegerMode::kHeuristic: rep.cheeger_mode = "heuristic"; break;
  }
  const int count = static_cast<int>(fam.members.size());
  rep.rows.resize(count);

  std::vector<std::string> errors(count);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      const FamilyMember& m = fam.members[i];
      FamilyRow& row = rep.rows[i];
      row.name = m.name;
      row.n = m.graph.n;
      SpectralReport sp = spectrum(m.graph, cfg);
      row.k = sp.k;
      row.lambda = sp.lambda;
      row.gap = sp.gap;

      CheegerMode eff = mode;
      if (eff == CheegerMode::kAuto)
        eff = m.graph.n <= cfg.caps.cut_exact_max_n ? CheegerMode::kExact
                                                    : CheegerMode::kHeuristic;
      if (eff == CheegerMode::kExact) {
        auto ch = cheeger_exact(m.graph, cfg.caps, cfg.exec);
        row.has_h = true;
        row.h_lo = row.h_hi = ch.h;
        row.h_exact = true;
      } else if (eff == CheegerMode::kHeuristic) {
        auto ch = cheeger_heuristic(m.graph, cfg);
        row.has_h = true;
        row.h_hi = ch.h;
        row.h_lo = row.k * sp.gap / 2.0;  // spectral lower bound
        row.h_exact = false;
      }
      if (mode != CheegerMode::kNone && m.graph.n <= cfg.caps.cut_exact_max_n)
        row.c = expander_constant(m.graph, cfg.caps, cfg.exec).c;
      row.has_cover = m.cover.has_value();
      row.cover_verified = m.cover && m.cover->verified;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (int i = 0; i < count; ++i)
    if (!errors[i].empty())
      throw ValidationError("family member '" + fam.members[i].name +
                            "': " + errors[i]);

  if (rep.rows.empty()) {
    rep.tau_note = "empty family";
    return rep;
  }
  rep.sup_lambda = rep.rows[0].lambda;
  rep.min_gap = rep.rows[0].gap;
  for (const auto& r : rep.rows) {
    rep.sup_lambda = std::max(rep.sup_lambda, r.lambda);
    rep.min_gap = std::min(rep.min_gap, r.gap);
    if (r.k != rep.rows[0].k) rep.same_degree = false;
  }
  rep.uniform_gap_verdict = rep.min_gap >= eps2;

  rep.has_h = std::all_of(rep.rows.begin(), rep.rows.end(),
                          [](const FamilyRow& r) { return r.has_h; });
  if (rep.has_h) {
    rep.inf_h_lo = rep.rows[0].h_lo;
    rep.inf_h_hi = rep.rows[0].h_hi;
    for (const auto& r : rep.rows) {
      rep.inf_h_lo = std::min(rep.inf_h_lo, r.h_lo);
      rep.inf_h_hi = std::min(rep.inf_h_hi, r.h_hi);
    }
    if (rep.inf_h_lo >= eps1)
      rep.cheeger_verdict = true;
    else if (rep.inf_h_hi < eps1)
      rep.cheeger_verdict = false;
    else
      rep.cheeger_verdict = std::nullopt;  // interval straddles the threshold
  }

  // tau needs the covering clause and the expander clause.  The covers run
  // down the tower, so every member except the top one must carry a
  // verified cover; a family without any covers only gets the gap verdict.
  int covers = 0, verified = 0;
  for (const auto& r : rep.rows) {
    covers += r.has_cover;
    verified += r.cover_verified;
  }
  if (!rep.same_degree) {
    rep.tau_verdict = false;
    rep.tau_note = "mixed degrees; tau verdict suppressed";
  } else if (covers == 0) {
    rep.tau_verdict = false;
    rep.tau_note = "no covering maps present";
  } else if (covers < count - 1 || verified != covers) {
    rep.tau_verdict = false;
    rep.tau_note = "covering maps missing or unverified";
  } else {
    rep.tau_verdict = rep.uniform_gap_verdict;
    rep.tau_note = rep.uniform_gap_verdict
                       ? "verified covers and uniform gap"
                       : "covers verified but gap below threshold";
  }
  return rep;
}

FolnerProbeRow probe_folner_candidate(const CoveringMap& cov,
                                      const VertexSet& candidate) {
  FolnerProbeRow row;
  row.candidate = candidate;
  if (candidate.empty()) {
    row.note = "empty candidate";
    return row;
  }
  std::vector<char> seen(cov.target.n, 0);
  row.injective = true;
  for (int v : candidate) {
    int image = cov.vmap[v];
    if (seen[image]) {
      row.injective = false;
      row.note = "fiber collision over target vertex " + std::to_string(image);
      break;
    }
    seen[image] = 1;
  }
  row.size_ok =
      2 * static_cast<int>(candidate.size()) <= cov.target.n;
  if (row.injective && row.size_ok) {
    VertexSet bd = boundary(cov.source, candidate);
    row.bound = static_cast<double>(bd.size()) / candidate.size();
    row.has_bound = true;
  }
  return row;
}

std::vector<FolnerProbeRow> folner_injection_probe(const GraphFamily& fam,
                                                   const std::vector<int>& sizes,
                                                   const RunConfig& cfg) {
  std::vector<FolnerProbeRow> rows;
  for (int i = 0; i < static_cast<int>(fam.members.size()); ++i) {
    const auto& member = fam.members[i];
    if (!member.cover || !member.cover->verified) {
      FolnerProbeRow skip;
      skip.member_index = i;
      skip.note = member.cover ? "cover unverified; skipped"
                               : "no covering map; skipped";
      rows.push_back(std::move(skip));
      continue;
    }
    const CoveringMap& cov = *member.cover;
    for (int s : sizes) {
      int capped = std::min(s, cov.source.n / 2);
      if (capped < 1) continue;
      FolnerReport fr = folner_ratio(cov.source, capped, FolnerMode::kAuto,
                                     cfg.caps, cfg.exec);
      FolnerProbeRow row = probe_folner_candidate(cov, fr.witness);
      row.member_index = i;
      row.requested_size = s;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace egt
