#include "egt/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "egt/errors.hpp"

namespace egt {

using nlohmann::json;

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json edges_json(const Graph& g) {
  json e = json::array();
  for (auto [u, v] : g.edges) e.push_back({u, v});
  return e;
}

json graph_stub(const Graph& g) {
  return {{"name", g.name}, {"n", g.n}, {"m", g.edge_count()}};
}

}  // namespace

json to_json(const Graph& g) {
  return {{"name", g.name},
          {"n", g.n},
          {"m", g.edge_count()},
          {"edges", edges_json(g)}};
}

json to_json(const RunConfig& cfg) {
  return {{"seed", cfg.seed},
          {"sample_count", cfg.sample_count},
          {"exec", cfg.exec == Exec::kParallel ? "parallel" : "serial"},
          {"caps",
           {{"group_order", cfg.caps.group_order},
            {"cut_exact_max_n", cfg.caps.cut_exact_max_n},
            {"folner_exhaustive", cfg.caps.folner_exhaustive},
            {"config_exhaustive", cfg.caps.config_exhaustive},
            {"dense_eigen_max_n", cfg.caps.dense_eigen_max_n},
            {"automorphism_max_n", cfg.caps.automorphism_max_n}}},
          {"tol",
           {{"eig", cfg.tol.eig},
            {"cnd_rel", cfg.tol.cnd_rel},
            {"exponent", cfg.tol.exponent},
            {"witness", cfg.tol.witness},
            {"cert", cfg.tol.cert}}}};
}

json to_json(const SpectralReport& r) {
  return {{"name", r.name},         {"n", r.n},
          {"k", r.k},               {"eigenvalues", r.eigenvalues},
          {"dense", r.dense},       {"lambda", r.lambda},
          {"gap", r.gap},           {"bipartite", r.bipartite},
          {"multiplicity_of_one", r.multiplicity_of_one}};
}

json to_json(const CheegerReport& r) {
  return {{"h", r.h},
          {"cut", r.cut},
          {"min_side", r.min_side},
          {"h_witness", r.witness_a},
          {"h_witness_b", r.witness_b},
          {"method", r.method}};
}

json to_json(const ExpanderReport& r) {
  return {{"c", r.c},
          {"boundary", r.boundary},
          {"c_witness", r.witness},
          {"n", r.n},
          {"d", r.d}};
}

json to_json(const FolnerReport& r) {
  return {{"ratio", r.ratio},
          {"boundary", r.boundary},
          {"witness", r.witness},
          {"mode", r.mode}};
}

json to_json(const CoveringMap& c) {
  json out{{"source", graph_stub(c.source)},
           {"target", graph_stub(c.target)},
           {"vmap", c.vmap},
           {"verified", c.verified},
           {"fibers_uniform", c.fibers_uniform},
           {"fiber_size", c.fiber_size}};
  if (!c.verified) {
    out["violation"] = to_string(c.violation);
    out["violation_witness"] = {c.witness_u, c.witness_v};
  }
  return out;
}

json to_json(const DeckGroup& d) {
  return {{"deck_order", d.perms.size()},
          {"free_action", d.free_action},
          {"closed", d.closed},
          {"perms", d.perms}};
}

json to_json(const QuotientResult& q) {
  return {{"quotient", to_json(q.quotient)},
          {"projection", q.projection},
          {"orbit_reps", q.orbit_reps},
          {"is_cover", q.is_cover},
          {"violation", to_string(q.violation)},
          {"fold_count", q.fold_count},
          {"parallel_count", q.parallel_count}};
}

json to_json(const ReductionCover& r) {
  json out{{"cover", to_json(r.cover)},
           {"degenerate", r.degenerate},
           {"collapse_notes", r.collapse_notes},
           {"kernel_size", r.kernel.size()}};
  return out;
}

json to_json(const ReplacementResult& r) {
  json hist = json::object();
  for (auto [size, count] : r.merge_histogram)
    hist[std::to_string(size)] = count;
  json labels = json::array();
  for (const auto& vertex : r.slot_labels) {
    json slots = json::array();
    for (const auto& s : vertex) slots.push_back({s.element, s.gen_index});
    labels.push_back(slots);
  }
  return {{"graph", to_json(r.graph)},
          {"policy", r.policy == ReplacePolicy::kLiteral ? "literal" : "matched"},
          {"merge_histogram", hist},
          {"degree_sequence", r.degree_sequence},
          {"regular", r.regular},
          {"loop_count", r.loop_count},
          {"multi_count", r.multi_count},
          {"class_p", r.class_p},
          {"class_q", r.class_q},
          {"slot_labels", labels}};
}

json to_json(const TransitivityReport& r) {
  return {{"transitive", r.transitive}, {"orbits", r.orbits}};
}

json to_json(const FixedVertexReport& r) {
  return {{"stabilizing", r.stabilizing},
          {"with_fixed_vertex", r.with_fixed_vertex},
          {"class_preserving", r.class_preserving},
          {"all_fix", r.all_fix},
          {"free_example", r.free_example}};
}

json to_json(const CndVerdict& v) {
  return {{"is_cnd", v.is_cnd},
          {"max_centered_eigenvalue", v.max_centered_eigenvalue},
          {"witness", v.witness},
          {"witness_form_value", v.witness_form_value}};
}

json to_json(const QuasiTriangleReport& r) {
  return {{"holds", r.holds},
          {"worst_slack", r.worst_slack},
          {"worst_triple", r.worst_triple}};
}

json to_json(const InvarianceReport& r) {
  return {{"invariant", r.invariant},
          {"worst", r.worst},
          {"worst_element", r.worst_element},
          {"worst_pair", {r.worst_u, r.worst_v}},
          {"exhaustive", r.exhaustive}};
}

json to_json(const BoundCertificate& c) {
  return {{"K", c.k_bound},
          {"L", c.l_bound},
          {"max_h", c.max_h},
          {"bound", c.bound},
          {"holds", c.holds},
          {"slack", c.slack},
          {"representatives", c.representatives}};
}

json to_json(const SupExponentResult& r) {
  json probes = json::array();
  for (auto [p, cnd] : r.probes) probes.push_back({{"p", p}, {"is_cnd", cnd}});
  return {{"p_lo", r.p_lo},
          {"p_hi", r.p_hi},
          {"capped", r.capped},
          {"probes", probes}};
}

json to_json(const RoundnessEstimate& r) {
  json out{{"q_lower", r.q_lower},
           {"q_upper", r.q_upper},
           {"q_lower_is_evidence_only", true},
           {"capped", r.capped},
           {"fully_exhaustive", r.fully_exhaustive},
           {"scope", r.scope}};
  if (r.witness) {
    out["witness"] = {{"n", r.witness->n},   {"a", r.witness->a},
                      {"b", r.witness->b},   {"q", r.witness->q},
                      {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
  }
  if (r.crosscheck_performed) {
    out["crosscheck"] = {{"ok", r.crosscheck_ok},
                         {"p_lo", r.crosscheck_p_lo},
                         {"p_hi", r.crosscheck_p_hi}};
  }
  return out;
}

json to_json(const OrbitData& o) {
  return {{"representatives", o.representatives},
          {"orbits", o.orbits},
          {"stabilizer_size", o.stabilizer_size},
          {"free", o.free},
          {"transitive", o.transitive}};
}

json to_json(const FamilyRow& r) {
  json out{{"name", r.name},     {"n", r.n},
           {"k", r.k},           {"lambda", r.lambda},
           {"gap", r.gap},       {"has_cover", r.has_cover},
           {"cover_verified", r.cover_verified}};
  if (r.has_h) {
    out["h_lo"] = r.h_lo;
    out["h_hi"] = r.h_hi;
    out["h_exact"] = r.h_exact;
  }
  if (r.c) out["c"] = *r.c;
  return out;
}

json to_json(const FamilyReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  json out{{"rows", rows},
           {"eps1", r.eps1},
           {"eps2", r.eps2},
           {"cheeger_mode", r.cheeger_mode},
           {"sup_lambda", r.sup_lambda},
           {"min_gap", r.min_gap},
           {"same_degree", r.same_degree},
           {"uniform_gap_verdict", r.uniform_gap_verdict},
           {"tau_verdict", r.tau_verdict},
           {"tau_note", r.tau_note}};
  if (r.has_h) {
    out["inf_h_lo"] = r.inf_h_lo;
    out["inf_h_hi"] = r.inf_h_hi;
  }
  if (r.cheeger_verdict)
    out["cheeger_verdict"] = *r.cheeger_verdict;
  else
    out["cheeger_verdict"] = "indeterminate";
  return out;
}

json to_json(const FolnerProbeRow& r) {
  return {{"member_index", r.member_index},
          {"requested_size", r.requested_size},
          {"candidate", r.candidate},
          {"injective", r.injective},
          {"size_ok", r.size_ok},
          {"has_bound", r.has_bound},
          {"bound", r.bound},
          {"note", r.note}};
}

std::string family_report_csv(const FamilyReport& r, const RunConfig& cfg) {
  std::ostringstream out;
  out << "# seed=" << cfg.seed << " eps1=" << fmt_double(r.eps1)
      << " eps2=" << fmt_double(r.eps2) << " cheeger_mode=" << r.cheeger_mode
      << "\n";
  out << "# uniform_gap_verdict=" << (r.uniform_gap_verdict ? 1 : 0)
      << " tau_verdict=" << (r.tau_verdict ? 1 : 0) << "\n";
  out << "name,n,k,lambda,gap,h_lo,h_hi,c,cover_verified\n";
  for (const auto& row : r.rows) {
    out << row.name << ',' << row.n << ',' << row.k << ','
        << fmt_double(row.lambda) << ',' << fmt_double(row.gap) << ',';
    if (row.has_h)
      out << fmt_double(row.h_lo) << ',' << fmt_double(row.h_hi);
    else
      out << ',';
    out << ',';
    if (row.c) out << fmt_double(*row.c);
    out << ',' << (row.cover_verified ? 1 : 0) << "\n";
  }
  return out.str();
}

Kernel read_kernel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open kernel file: " + path);
  // JSON form: {"values": [[...], ...], "labels": [...]?}
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    json j = json::parse(in);
    auto rows = j.at("values").get<std::vector<std::vector<double>>>();
    const int n = static_cast<int>(rows.size());
    Eigen::MatrixXd h(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n)
        throw ValidationError("kernel json: values must be square");
      for (int jj = 0; jj < n; ++jj) h(i, jj) = rows[i][jj];
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return Kernel(std::move(h), std::move(labels));
  }
  int n;
  if (!(in >> n) || n < 1)
    throw ValidationError("kernel file: first token must be the point count");
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> h(i, j)))
        throw ValidationError("kernel file: expected " + std::to_string(n * n) +
                              " matrix entries");
  return Kernel(std::move(h));
}

}  // namespace egt
