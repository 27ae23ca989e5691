#include "egt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "egt/errors.hpp"
#include "egt/metric.hpp"

namespace egt {

namespace {

int regular_degree(const Graph& g) {
  if (g.n == 0) throw ValidationError("spectrum: empty graph");
  auto prof = degree_profile(g);
  if (!prof.is_regular)
    throw ValidationError("markov matrix needs a regular graph (degrees " +
                          std::to_string(prof.degree_sequence.front()) + ".." +
                          std::to_string(prof.degree_sequence.back()) + ")");
  if (*prof.k < 1)
    throw ValidationError(
        "markov matrix needs degree >= 1; the edgeless case has no random walk");
  return *prof.k;
}

// y = P x for the walk matrix P = (1/k) A, straight off the adjacency lists.
void walk_apply(const Graph& g, int k, const Eigen::VectorXd& x,
                Eigen::VectorXd& y) {
  const double inv_k = 1.0 / k;
  for (int u = 0; u < g.n; ++u) {
    double s = 0;
    for (int w : g.adj[u]) s += x[w];
    y[u] = s * inv_k;
  }
}

struct LanczosResult {
  std::vector<double> ritz;  // descending
  Eigen::MatrixXd basis;     // n x m
  Eigen::MatrixXd vectors;   // m x m eigenvectors of the tridiagonal
  int steps = 0;
};

// Lanczos with full reorthogonalization, deflating the per-component
// constant vectors (the eigenvalue-1 eigenspace of a regular graph walk).
LanczosResult lanczos_extremal(const Graph& g, int k, std::uint64_t seed,
                               int max_steps) {
  const int n = g.n;
  std::vector<Eigen::VectorXd> deflate;
  {
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> stack{s};
      comp[s] = nc;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.adj[u])
          if (comp[w] < 0) {
            comp[w] = nc;
            stack.push_back(w);
          }
      }
      ++nc;
    }
    for (int c = 0; c < nc; ++c) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
      for (int u = 0; u < n; ++u)
        if (comp[u] == c) v[u] = 1.0;
      deflate.push_back(v.normalized());
    }
  }
  auto project_out = [&deflate](Eigen::VectorXd& v) {
    for (const auto& d : deflate) v -= d.dot(v) * d;
  };

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = gauss(rng);
  project_out(v);
  v.normalize();

  const int m = std::min(max_steps, n - 1);
  Eigen::MatrixXd basis(n, m);
  std::vector<double> alpha, beta;
  Eigen::VectorXd w(n);
  int steps = 0;
  for (int j = 0; j < m; ++j) {
    basis.col(j) = v;
    walk_apply(g, k, v, w);
    project_out(w);
    double a = basis.col(j).dot(w);
    alpha.push_back(a);
    w -= a * basis.col(j);
    if (j > 0) w -= beta.back() * basis.col(j - 1);
    for (int r = 0; r <= j; ++r) w -= basis.col(r).dot(w) * basis.col(r);
    double b = w.norm();
    ++steps;
    if (b < 1e-12) break;
    beta.push_back(b);
    v = w / b;
  }

  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(steps, steps);
  for (int i = 0; i < steps; ++i) {
    tri(i, i) = alpha[i];
    if (i + 1 < steps) tri(i, i + 1) = tri(i + 1, i) = beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
  LanczosResult res;
  res.steps = steps;
  res.basis = basis.leftCols(steps);
  res.vectors = es.eigenvectors();
  res.ritz.assign(es.eigenvalues().data(), es.eigenvalues().data() + steps);
  std::reverse(res.ritz.begin(), res.ritz.end());
  res.vectors = res.vectors.rowwise().reverse().eval();
  return res;
}

}  // namespace

Eigen::MatrixXd markov_matrix(const Graph& g) {
  const int k = regular_degree(g);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(g.n, g.n);
  const double inv_k = 1.0 / k;
  for (auto [u, v] : g.edges) {
    p(u, v) = inv_k;
    p(v, u) = inv_k;
  }
  return p;
}

SpectralReport spectrum(const Graph& g, const RunConfig& cfg) {
  const int k = regular_degree(g);
  SpectralReport rep;
  rep.name = g.name;
  rep.n = g.n;
  rep.k = k;
  rep.bipartite = two_coloring(g).has_value();

  if (g.n <= cfg.caps.dense_eigen_max_n) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(markov_matrix(g),
                                                      Eigen::EigenvaluesOnly);
    rep.eigenvalues.assign(es.eigenvalues().data(),
                           es.eigenvalues().data() + g.n);
    std::reverse(rep.eigenvalues.begin(), rep.eigenvalues.end());
    rep.dense = true;
    rep.multiplicity_of_one = 0;
    for (double x : rep.eigenvalues)
      if (x > 1.0 - cfg.tol.eig) ++rep.multiplicity_of_one;
  } else {
    auto lz = lanczos_extremal(g, k, cfg.seed, 120);
    const int keep = std::min<int>(6, lz.steps);
    rep.eigenvalues.clear();
    for (int i = 0; i < keep; ++i) rep.eigenvalues.push_back(lz.ritz[i]);
    for (int i = std::max(keep, lz.steps - keep); i < lz.steps; ++i)
      rep.eigenvalues.push_back(lz.ritz[i]);
    rep.dense = false;
    rep.multiplicity_of_one = component_count(g);
  }

  rep.lambda = std::numeric_limits<double>::quiet_NaN();
  for (double x : rep.eigenvalues) {
    if (x <= 1.0 - cfg.tol.eig) {
      rep.lambda = x;
      break;
    }
  }
  if (std::isnan(rep.lambda))
    throw ValidationError(
        "spectrum: no eigenvalue below 1; graph too small for a gap");
  rep.gap = 1.0 - rep.lambda;
  return rep;
}

std::pair<double, Eigen::VectorXd> lambda_eigenpair(const Graph& g,
                                                    const RunConfig& cfg) {
  const int k = regular_degree(g);
  if (g.n <= cfg.caps.dense_eigen_max_n) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(markov_matrix(g));
    const auto& ev = es.eigenvalues();
    for (int i = g.n - 1; i >= 0; --i) {
      if (ev[i] <= 1.0 - cfg.tol.eig)
        return {ev[i], es.eigenvectors().col(i)};
    }
    throw ValidationError("lambda_eigenpair: no eigenvalue below 1");
  }
  auto lz = lanczos_extremal(g, k, cfg.seed, 160);
  Eigen::VectorXd ritz_vec = lz.basis * lz.vectors.col(0);
  return {lz.ritz[0], ritz_vec.normalized()};
}

}  // namespace egt
