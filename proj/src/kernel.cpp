#include "egt/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>

#include "egt/errors.hpp"
#include "parallel_util.hpp"

namespace egt {

Kernel::Kernel(Eigen::MatrixXd values, std::vector<std::string> labels)
    : values_(std::move(values)), labels_(std::move(labels)) {
  if (values_.rows() != values_.cols())
    throw ValidationError("kernel: matrix must be square");
  for (int i = 0; i < values_.rows(); ++i) {
    if (values_(i, i) != 0.0)
      throw ValidationError("kernel: diagonal must be exactly zero");
    for (int j = i + 1; j < values_.cols(); ++j)
      if (values_(i, j) != values_(j, i))
        throw ValidationError("kernel: matrix must be symmetric");
  }
  if (!labels_.empty() &&
      static_cast<int>(labels_.size()) != values_.rows())
    throw ValidationError("kernel: label count mismatch");
}

double Kernel::max_abs() const {
  return size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff();
}

namespace {

Eigen::MatrixXd power_matrix(const DistanceMatrix& d, double exponent) {
  if (exponent < 0)
    throw ValidationError("kernel_from_metric: exponent must be >= 0");
  const int n = d.size();
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto dist = d(i, j);
      if (dist == DistanceMatrix::kUnreachable)
        throw ValidationError("kernel_from_metric: metric must be finite "
                              "(connected graph)");
      h(i, j) = i == j ? 0.0 : std::pow(static_cast<double>(dist), exponent);
    }
  return h;
}

}  // namespace

Kernel kernel_from_metric(const Graph& g, double exponent) {
  if (!g.connected())
    throw ValidationError("kernel_from_metric: graph must be connected");
  return Kernel(power_matrix(bfs_metric(g), exponent));
}

Kernel kernel_from_metric(const DistanceMatrix& d, double exponent) {
  return Kernel(power_matrix(d, exponent));
}

Kernel zero_kernel(int n) { return Kernel(Eigen::MatrixXd::Zero(n, n)); }

double kernel_form_value(const Kernel& k, const std::vector<double>& c) {
  if (static_cast<int>(c.size()) != k.size())
    throw ValidationError("form value: coefficient size mismatch");
  Eigen::Map<const Eigen::VectorXd> v(c.data(), k.size());
  return v.dot(k.values() * v);
}

CndVerdict is_negative_kernel(const Kernel& k, double tol_rel) {
  CndVerdict verdict;
  const int n = k.size();
  const double scale = k.max_abs();
  if (n <= 1 || scale == 0.0) {  // zero and one-point kernels are CND
    verdict.is_cnd = true;
    return verdict;
  }
  Eigen::MatrixXd j =
      Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::MatrixXd m = j * k.values() * j;
  m = ((m + m.transpose()) / 2).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  verdict.max_centered_eigenvalue = es.eigenvalues()(n - 1);
  verdict.is_cnd = verdict.max_centered_eigenvalue <= tol_rel * scale;
  if (!verdict.is_cnd) {
    Eigen::VectorXd c = es.eigenvectors().col(n - 1);
    c.array() -= c.mean();  // exact zero-sum projection
    double amax = c.cwiseAbs().maxCoeff();
    c /= amax;
    for (int i = 0; i < n; ++i) {
      if (std::abs(c[i]) > 1e-9) {
        if (c[i] < 0) c = -c;
        break;
      }
    }
    verdict.witness.assign(c.data(), c.data() + n);
    verdict.witness_form_value = kernel_form_value(k, verdict.witness);
  }
  return verdict;
}

QuasiTriangleReport quasi_triangle_check(const Kernel& k, Exec exec) {
  const int n = k.size();
  struct Worst {
    double slack = -std::numeric_limits<double>::infinity();
    std::array<int, 3> triple{-1, -1, -1};
    bool set = false;
    void consider(double s, int a, int b, int c) {
      std::array<int, 3> t{a, b, c};
      if (!set || s > slack || (s == slack && t < triple)) {
        slack = s;
        triple = t;
        set = true;
      }
    }
    void merge(const Worst& o) {
      if (o.set) consider(o.slack, o.triple[0], o.triple[1], o.triple[2]);
    }
  };
  auto scan_row = [&k, n](int a, Worst& w) {
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        w.consider(k(a, b) - 2.0 * (k(a, c) + k(c, b)), a, b, c);
  };
  Worst worst;
  if (exec == Exec::kSerial || n < 2) {
    for (int a = 0; a < n; ++a) scan_row(a, worst);
  } else {
    std::vector<Worst> per_thread(detail::max_threads());
#pragma omp parallel
    {
      Worst local;
#pragma omp for schedule(static)
      for (int a = 0; a < n; ++a) scan_row(a, local);
      per_thread[detail::thread_id()] = local;
    }
    for (const auto& w : per_thread) worst.merge(w);
  }
  QuasiTriangleReport rep;
  if (worst.set) {
    rep.worst_slack = worst.slack;
    rep.worst_triple = worst.triple;
  }
  rep.holds = rep.worst_slack <= 1e-12 * std::max(1.0, k.max_abs());
  return rep;
}

InvarianceReport invariance_check(const Kernel& k, const GroupAction& a,
                                  double tol, const RunConfig& cfg) {
  if (k.size() != a.graph_n)
    throw ValidationError("invariance: kernel and action sizes differ");
  const int n = k.size();
  InvarianceReport rep;
  const long long total =
      static_cast<long long>(a.size()) * n * n;
  rep.exhaustive = total <= cfg.caps.config_exhaustive;

  struct Worst {
    double value = -1.0;
    int e = -1, u = -1, v = -1;
    void consider(double w, int ee, int uu, int vv) {
      if (w > value || (w == value && std::array{ee, uu, vv} <
                                          std::array{e, u, v})) {
        value = w;
        e = ee;
        u = uu;
        v = vv;
      }
    }
  };
  Worst worst;
  if (rep.exhaustive) {
    std::vector<Worst> per_thread(detail::max_threads());
#pragma omp parallel
    {
      Worst local;
#pragma omp for schedule(static)
      for (int e = 0; e < a.size(); ++e) {
        const auto& p = a.perms[e];
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v)
            local.consider(std::abs(k(p[u], p[v]) - k(u, v)), e, u, v);
      }
      per_thread[detail::thread_id()] = local;
    }
    for (const auto& w : per_thread)
      if (w.e >= 0) worst.consider(w.value, w.e, w.u, w.v);
  } else {
    std::mt19937_64 rng(cfg.seed ^ 0x1f3d5b79a2c4e680ULL);
    std::uniform_int_distribution<int> elem(0, a.size() - 1), vert(0, n - 1);
    for (std::int64_t i = 0; i < cfg.sample_count; ++i) {
      int e = elem(rng), u = vert(rng), v = vert(rng);
      const auto& p = a.perms[e];
      worst.consider(std::abs(k(p[u], p[v]) - k(u, v)), e, u, v);
    }
  }
  rep.worst = std::max(worst.value, 0.0);
  rep.worst_element = worst.e;
  rep.worst_u = worst.u;
  rep.worst_v = worst.v;
  rep.invariant = rep.worst <= tol;
  return rep;
}

Kernel restrict_to_orbit(const Kernel& k, const GroupAction& a, int x) {
  if (k.size() != a.graph_n)
    throw ValidationError("restrict_to_orbit: kernel and action sizes differ");
  if (x < 0 || x >= a.graph_n)
    throw ValidationError("restrict_to_orbit: basepoint out of range");
  const int m = a.size();
  Eigen::MatrixXd h(m, m);
  for (int g1 = 0; g1 < m; ++g1)
    for (int g2 = 0; g2 < m; ++g2)
      h(g1, g2) = g1 == g2 ? 0.0 : k(a.perms[g1][x], a.perms[g2][x]);
  return Kernel(std::move(h), a.labels);
}

BoundCertificate bound_certificate(const Kernel& k, const GroupAction& a,
                                   const RunConfig& cfg) {
  if (k.size() != a.graph_n)
    throw ValidationError("bound certificate: kernel and action sizes differ");
  const double scale = std::max(1.0, k.max_abs());
  auto cnd = is_negative_kernel(k, cfg.tol.cnd_rel);
  if (!cnd.is_cnd) {
    std::ostringstream msg;
    msg << "bound certificate precondition failed: kernel is not CND "
        << "(max centered eigenvalue " << cnd.max_centered_eigenvalue << ")";
    throw ValidationError(msg.str());
  }
  auto inv = invariance_check(k, a, cfg.tol.cert * scale, cfg);
  if (!inv.invariant) {
    std::ostringstream msg;
    msg << "bound certificate precondition failed: kernel is not invariant "
        << "(worst violation " << inv.worst << " at element "
        << inv.worst_element << ")";
    throw ValidationError(msg.str());
  }

  BoundCertificate cert;
  cert.representatives = orbits_and_stabilizers(a).representatives;
  for (int x : cert.representatives)
    for (const auto& p : a.perms)
      cert.k_bound = std::max(cert.k_bound, k(p[x], x));
  for (int x : cert.representatives)
    for (int y : cert.representatives)
      cert.l_bound = std::max(cert.l_bound, k(x, y));
  cert.max_h = k.max_abs() == 0.0 ? 0.0 : k.values().maxCoeff();
  cert.bound = 6.0 * cert.k_bound + 4.0 * cert.l_bound;
  cert.slack = cert.bound - cert.max_h;
  cert.holds = cert.max_h <= cert.bound + cfg.tol.cert * scale;
  return cert;
}

namespace {

struct Probe {
  double exponent;
  bool is_cnd;
};

void check_probe_monotone(const std::vector<std::pair<double, bool>>& probes) {
  double max_cnd = -1.0, min_not = 1e300;
  for (auto [p, cnd] : probes) {
    if (cnd)
      max_cnd = std::max(max_cnd, p);
    else
      min_not = std::min(min_not, p);
  }
  if (max_cnd > min_not)
    throw std::runtime_error(
        "cnd_sup_exponent: probe results are not monotone in the exponent "
        "(CND at " +
        std::to_string(max_cnd) + " but not at " + std::to_string(min_not) +
        "); bisection invalid for this metric");
}

}  // namespace

SupExponentResult cnd_sup_exponent(const DistanceMatrix& d, double tol_p,
                                   const RunConfig& cfg) {
  constexpr double kCap = 8.0;
  auto probe = [&d, &cfg](double p) {
    return is_negative_kernel(kernel_from_metric(d, p), cfg.tol.cnd_rel).is_cnd;
  };
  SupExponentResult res;
  bool cap_cnd = probe(kCap);
  res.probes.emplace_back(kCap, cap_cnd);
  if (cap_cnd) {
    res.p_lo = res.p_hi = kCap;
    res.capped = true;
    return res;
  }
  double lo = 0.0, hi = kCap;
  bool lo_cnd = probe(lo);
  res.probes.emplace_back(lo, lo_cnd);
  if (!lo_cnd)
    throw std::runtime_error(
        "cnd_sup_exponent: d^0 is not CND; input is not a valid metric kernel");
  while (hi - lo > tol_p) {
    double mid = (lo + hi) / 2;
    bool c = probe(mid);
    res.probes.emplace_back(mid, c);
    (c ? lo : hi) = mid;
  }
  check_probe_monotone(res.probes);
  res.p_lo = lo;
  res.p_hi = hi;
  return res;
}

SupExponentResult cnd_sup_exponent(const Graph& g, double tol_p,
                                   const RunConfig& cfg) {
  if (!g.connected())
    throw ValidationError("cnd_sup_exponent: graph must be connected");
  return cnd_sup_exponent(bfs_metric(g), tol_p, cfg);
}

namespace {

class RoundnessSearch {
 public:
  RoundnessSearch(const DistanceMatrix& d, int n_max, const RunConfig& cfg)
      : d_(d), v_(d.size()), n_max_(n_max), cfg_(cfg) {
    if (!d_.all_finite())
      throw ValidationError("roundness: metric must be finite");
    for (int n = 2; n <= n_max_; ++n) {
      double total = std::pow(static_cast<double>(v_), 2.0 * n);
      bool ex = total <= static_cast<double>(cfg_.caps.config_exhaustive);
      exhaustive_.push_back(ex);
      std::ostringstream s;
      if (ex)
        s << "n=" << n << ": exhaustive (" << static_cast<long long>(total)
          << " configurations)";
      else
        s << "n=" << n << ": common-neighbor sweep + " << cfg_.sample_count
          << " seeded samples";
      scope_.push_back(s.str());
    }
    // neighbor lists reconstructed from the metric (distance-1 pairs)
    nbrs_.assign(v_, {});
    for (int u = 0; u < v_; ++u)
      for (int w = 0; w < v_; ++w)
        if (d_(u, w) == 1) nbrs_[u].push_back(w);
  }

  bool fully_exhaustive() const {
    return std::all_of(exhaustive_.begin(), exhaustive_.end(),
                       [](bool b) { return b; });
  }
  const std::vector<std::string>& scope() const { return scope_; }

  // Finds a violating configuration at exponent q, or nullopt.
  std::optional<RoundnessWitness> violation_at(double q, int probe_index) {
    pw_.assign(d_.max_finite() + 1, 0.0);
    for (int dist = 1; dist < static_cast<int>(pw_.size()); ++dist)
      pw_[dist] = std::pow(static_cast<double>(dist), q);
    for (int n = 2; n <= n_max_; ++n) {
      auto w = exhaustive_[n - 2] ? search_exhaustive(n, q)
                                  : search_sampled(n, q, probe_index);
      if (w) return w;
    }
    return std::nullopt;
  }

 private:
  double powd(int dist, double) const { return pw_[dist]; }

  std::optional<RoundnessWitness> evaluate(const std::vector<int>& a,
                                           const std::vector<int>& b,
                                           double q) const {
    const int n = static_cast<int>(a.size());
    double lhs = 0, rhs = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j)
        lhs += powd(d_(a[i], a[j]), q) + powd(d_(b[i], b[j]), q);
      for (int j = 0; j < n; ++j) rhs += powd(d_(a[i], b[j]), q);
    }
    if (lhs > rhs + 1e-9 * std::max(1.0, rhs)) {
      RoundnessWitness w;
      w.n = n;
      w.a = a;
      w.b = b;
      w.q = q;
      w.lhs = lhs;
      w.rhs = rhs;
      return w;
    }
    return std::nullopt;
  }

  // Lexicographic odometer over (a_1..a_n, b_1..b_n); first violation wins.
  std::optional<RoundnessWitness> search_exhaustive(int n, double q) const {
    std::vector<int> tuple(2 * n, 0);
    std::vector<int> a(n), b(n);
    while (true) {
      std::copy(tuple.begin(), tuple.begin() + n, a.begin());
      std::copy(tuple.begin() + n, tuple.end(), b.begin());
      if (auto w = evaluate(a, b, q)) return w;
      int i = 2 * n - 1;
      while (i >= 0 && tuple[i] == v_ - 1) tuple[i--] = 0;
      if (i < 0) return std::nullopt;
      ++tuple[i];
    }
  }

  // Deterministic sweep over star configurations (distinct points with a
  // common neighbor as the a-side, the center repeated as the b-side) —
  // the shape the two-point witness generalizes to — then seeded uniform
  // samples.  The lexicographic minimum among found violators wins.
  std::optional<RoundnessWitness> search_sampled(int n, double q,
                                                 int probe_index) const {
    std::optional<RoundnessWitness> best;
    auto consider = [&best](const RoundnessWitness& w) {
      if (!best) {
        best = w;
        return;
      }
      auto key = [](const RoundnessWitness& x) { return std::pair(x.a, x.b); };
      if (key(w) < key(*best)) best = w;
    };

    for (int center = 0; center < v_; ++center) {
      const auto& nb = nbrs_[center];
      if (static_cast<int>(nb.size()) < n) continue;
      std::vector<int> comb(n);
      std::vector<int> idx(n);
      for (int i = 0; i < n; ++i) idx[i] = i;
      std::vector<int> bside(n, center);
      while (true) {
        for (int i = 0; i < n; ++i) comb[i] = nb[idx[i]];
        if (auto w = evaluate(comb, bside, q)) consider(*w);
        int i = n - 1;
        const int m = static_cast<int>(nb.size());
        while (i >= 0 && idx[i] == m - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
      }
    }

    std::mt19937_64 rng(cfg_.seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)) ^
                        (0xc2b2ae3d27d4eb4fULL * (probe_index + 1)));
    std::uniform_int_distribution<int> pick(0, v_ - 1);
    std::vector<int> a(n), b(n);
    for (std::int64_t s = 0; s < cfg_.sample_count; ++s) {
      for (int i = 0; i < n; ++i) a[i] = pick(rng);
      for (int i = 0; i < n; ++i) b[i] = pick(rng);
      if (auto w = evaluate(a, b, q)) consider(*w);
    }
    return best;
  }

  const DistanceMatrix& d_;
  int v_;
  int n_max_;
  RunConfig cfg_;
  std::vector<bool> exhaustive_;
  std::vector<std::string> scope_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<double> pw_;  // dist^q for the current probe
};

}  // namespace

RoundnessEstimate roundness_estimate(const DistanceMatrix& d, int n_max,
                                     double tol_q, const RunConfig& cfg) {
  if (n_max < 2) throw ValidationError("roundness: n_max must be >= 2");
  constexpr double kCap = 8.0;
  RoundnessSearch search(d, n_max, cfg);
  RoundnessEstimate res;
  res.scope = search.scope();
  res.fully_exhaustive = search.fully_exhaustive();

  int probe_index = 0;
  auto cap_hit = search.violation_at(kCap, probe_index++);
  if (!cap_hit) {
    res.q_lower = res.q_upper = kCap;
    res.capped = true;
    return res;
  }
  double lo = 0.0, hi = kCap;
  res.witness = cap_hit;
  while (hi - lo > tol_q) {
    double mid = (lo + hi) / 2;
    if (auto w = search.violation_at(mid, probe_index++)) {
      hi = mid;
      res.witness = w;
    } else {
      lo = mid;
    }
  }
  res.q_lower = lo;
  res.q_upper = hi;

  if (res.fully_exhaustive) {
    auto sup = cnd_sup_exponent(d, tol_q, cfg);
    res.crosscheck_performed = true;
    res.crosscheck_p_lo = sup.p_lo;
    res.crosscheck_p_hi = sup.p_hi;
    res.crosscheck_ok =
        std::abs(res.q_upper - sup.p_hi) <= 4.0 * tol_q || sup.capped;
  }
  return res;
}

RoundnessEstimate roundness_estimate(const Graph& g, int n_max, double tol_q,
                                     const RunConfig& cfg) {
  if (!g.connected())
    throw ValidationError("roundness: graph must be connected");
  return roundness_estimate(bfs_metric(g), n_max, tol_q, cfg);
}

}  // namespace egt
