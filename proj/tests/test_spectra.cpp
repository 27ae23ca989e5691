#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "egt/cuts.hpp"
#include "egt/errors.hpp"
#include "egt/group.hpp"
#include "egt/metric.hpp"
#include "egt/spectra.hpp"

using namespace egt;
using doctest::Approx;

TEST_CASE("markov matrix") {
  Eigen::MatrixXd k2 = markov_matrix(build_graph(2, {{0, 1}}));
  CHECK(k2(0, 1) == 1.0);
  CHECK(k2(0, 0) == 0.0);

  Eigen::MatrixXd c4 = markov_matrix(make_cycle(4));
  CHECK(c4(0, 1) == 0.5);
  CHECK(c4(0, 2) == 0.0);
  for (int i = 0; i < 4; ++i) CHECK(c4.row(i).sum() == Approx(1.0));

  Eigen::MatrixXd pet = markov_matrix(make_petersen());
  for (int i = 0; i < 10; ++i) CHECK(pet.row(i).sum() == Approx(1.0));

  CHECK_THROWS_AS(markov_matrix(make_path(3)), ValidationError);
  CHECK_THROWS_AS(markov_matrix(build_graph(1, {})), ValidationError);
}

TEST_CASE("spectrum of small graphs") {
  SpectralReport k4 = spectrum(make_complete(4));
  CHECK(k4.lambda == Approx(-1.0 / 3).epsilon(1e-12));
  CHECK(k4.gap == Approx(4.0 / 3).epsilon(1e-12));
  CHECK(k4.eigenvalues[0] == Approx(1.0));
  CHECK(k4.multiplicity_of_one == 1);
  CHECK_FALSE(k4.bipartite);

  SpectralReport c6 = spectrum(make_cycle(6));
  CHECK(c6.lambda == Approx(0.5));
  CHECK(c6.bipartite);
  std::vector<double> expect{1, 0.5, 0.5, -0.5, -0.5, -1};
  for (int i = 0; i < 6; ++i)
    CHECK(c6.eigenvalues[i] == Approx(expect[i]).epsilon(1e-9));

  SpectralReport pet = spectrum(make_petersen());
  CHECK(pet.lambda == Approx(1.0 / 3));
  int third = 0, minus23 = 0;
  for (double x : pet.eigenvalues) {
    if (std::abs(x - 1.0 / 3) < 1e-9) ++third;
    if (std::abs(x + 2.0 / 3) < 1e-9) ++minus23;
  }
  CHECK(third == 5);
  CHECK(minus23 == 4);
}

TEST_CASE("eigenvalue sanity") {
  for (const Graph& g :
       {make_cycle(5), make_complete(6), make_petersen(), make_torus(3, 4)}) {
    SpectralReport rep = spectrum(g);
    CHECK(rep.eigenvalues.front() == Approx(1.0).epsilon(1e-10));
    CHECK(rep.eigenvalues.back() >= -1.0 - 1e-9);
    CHECK(std::is_sorted(rep.eigenvalues.rbegin(), rep.eigenvalues.rend()));
    // constant vector is an eigenvector for 1
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(g.n);
    CHECK((markov_matrix(g) * ones - ones).norm() <= 1e-8 * g.n);
  }
}

TEST_CASE("bipartite iff -1 in spectrum") {
  for (const Graph& g : {make_cycle(6), make_cycle(5), make_complete(4),
                         make_complete_bipartite(3, 3), make_torus(4, 4),
                         make_torus(3, 3)}) {
    SpectralReport rep = spectrum(g);
    bool has_minus1 = std::abs(rep.eigenvalues.back() + 1.0) < 1e-9;
    CHECK(rep.bipartite == has_minus1);
  }
}

TEST_CASE("disconnected spectra") {
  Graph two_c4 = disjoint_union(make_cycle(4), make_cycle(4));
  SpectralReport rep = spectrum(two_c4);
  CHECK(rep.multiplicity_of_one == 2);

  // union spectrum = multiset union
  SpectralReport one = spectrum(make_cycle(4));
  std::vector<double> doubled;
  for (double x : one.eigenvalues) {
    doubled.push_back(x);
    doubled.push_back(x);
  }
  std::sort(doubled.rbegin(), doubled.rend());
  REQUIRE(rep.eigenvalues.size() == doubled.size());
  for (std::size_t i = 0; i < doubled.size(); ++i)
    CHECK(rep.eigenvalues[i] == Approx(doubled[i]).epsilon(1e-9));

  // lambda skips the eigenvalue-1 cluster
  CHECK(rep.lambda == Approx(0.0).epsilon(1e-9));
}

TEST_CASE("lanczos path matches dense on a forced small cap") {
  FiniteGroup g = FiniteGroup::enumerate(sl_generators(2, 7));
  Graph cay = cayley_graph(g).graph;
  RunConfig dense_cfg;
  SpectralReport dense = spectrum(cay, dense_cfg);
  RunConfig lanczos_cfg;
  lanczos_cfg.caps.dense_eigen_max_n = 100;  // force the iterative path
  SpectralReport lz = spectrum(cay, lanczos_cfg);
  CHECK_FALSE(lz.dense);
  CHECK(lz.lambda == Approx(dense.lambda).epsilon(1e-8));
  CHECK(lz.multiplicity_of_one == 1);

  auto [lam, vec] = lambda_eigenpair(cay, lanczos_cfg);
  CHECK(lam == Approx(dense.lambda).epsilon(1e-8));
  // Ritz vector is a genuine eigenvector for lambda
  Eigen::VectorXd y = Eigen::VectorXd::Zero(cay.n);
  for (int u = 0; u < cay.n; ++u)
    for (int w : cay.adj[u]) y[u] += vec[w] / 4.0;
  CHECK((y - lam * vec).norm() <= 1e-6);
}

TEST_CASE("cheeger exact") {
  CheegerReport k4 = cheeger_exact(make_complete(4));
  CHECK(k4.h == Approx(2.0));
  CHECK(k4.witness_a == VertexSet{0, 1});

  CheegerReport c6 = cheeger_exact(make_cycle(6));
  CHECK(c6.h == Approx(2.0 / 3));
  CHECK(c6.witness_a == VertexSet{0, 1, 2});
  CHECK(c6.cut == 2);
  CHECK(c6.min_side == 3);

  CheegerReport t44 = cheeger_exact(make_torus(4, 4));
  CHECK(t44.h == Approx(1.0));
  CHECK(t44.witness_a == VertexSet{0, 1, 2, 3, 4, 5, 6, 7});

  CheegerReport t33 = cheeger_exact(make_torus(3, 3));
  CHECK(t33.h == Approx(2.0));

  CHECK_THROWS_AS(cheeger_exact(make_torus(5, 5)), ResourceError);
  CHECK_THROWS_AS(cheeger_exact(build_graph(4, {{0, 1}, {2, 3}})),
                  ValidationError);
}

TEST_CASE("cheeger heuristic upper-bounds exact") {
  for (const Graph& g : {make_cycle(6), make_cycle(9), make_complete(5),
                         make_petersen(), make_torus(4, 4), make_torus(3, 4)}) {
    CheegerReport ex = cheeger_exact(g);
    CheegerReport he = cheeger_heuristic(g);
    CHECK(he.h >= ex.h - 1e-12);
    CHECK(he.method == "heuristic-upper-bound");
    // witness recomputes to the reported value
    CHECK(edge_cut(g, he.witness_a, he.witness_b) == he.cut);
    CHECK(he.h == Approx(static_cast<double>(he.cut) / he.min_side));
  }

  CheegerReport k2 = cheeger_heuristic(build_graph(2, {{0, 1}}));
  CHECK(k2.h == Approx(1.0));
  CHECK(k2.witness_a == VertexSet{0});
}

TEST_CASE("cheeger heuristic on a 120-vertex cayley graph") {
  Graph cay = cayley_graph(FiniteGroup::enumerate(sl_generators(2, 5))).graph;
  CheegerReport he = cheeger_heuristic(cay);
  CHECK(he.h > 0.0);
  CHECK(edge_cut(cay, he.witness_a, he.witness_b) == he.cut);
  long long min_side = std::min(he.witness_a.size(), he.witness_b.size());
  CHECK(he.h == Approx(static_cast<double>(he.cut) / min_side));
}

TEST_CASE("expander constant") {
  for (int n : {4, 5, 6}) {
    ExpanderReport rep = expander_constant(make_complete(n));
    CHECK(rep.c == Approx(static_cast<double>(n) / (n - 1)));
    CHECK(rep.witness.size() == static_cast<std::size_t>(n - 1));
  }

  ExpanderReport c6 = expander_constant(make_cycle(6));
  CHECK(c6.c == Approx(1.2));
  CHECK(c6.witness == VertexSet{0, 1, 2, 3, 4});

  // witness recomputation: |bd(A)| = c (1 - |A|/n)|A| within 1e-12
  for (const Graph& g : {make_cycle(6), make_complete(5), make_petersen()}) {
    ExpanderReport rep = expander_constant(g);
    double lhs = static_cast<double>(boundary(g, rep.witness).size());
    double sz = static_cast<double>(rep.witness.size());
    CHECK(std::abs(lhs - rep.c * (1.0 - sz / g.n) * sz) <= 1e-12);
  }

  // single-vertex subsets give ratio |N(v)| / (1 - 1/n)
  ExpanderReport pet = expander_constant(make_petersen());
  CHECK(pet.c <= 3.0 / (1.0 - 0.1) + 1e-12);

  CHECK_THROWS_AS(expander_constant(make_torus(5, 5)), ResourceError);
}

TEST_CASE("folner ratios") {
  FolnerReport c6 = folner_ratio(make_cycle(6), 3);
  CHECK(c6.ratio == Approx(2.0 / 3));
  CHECK(c6.witness == VertexSet{0, 1, 2});
  CHECK(c6.mode == "exact");

  FolnerReport k4 = folner_ratio(make_complete(4), 2);
  CHECK(k4.ratio == Approx(1.0));

  CHECK_THROWS_AS(folner_ratio(make_cycle(6), 4), ValidationError);
  CHECK_THROWS_AS(folner_ratio(make_cycle(6), 0), ValidationError);

  FolnerReport greedy = folner_ratio(make_torus(8, 8), 32, FolnerMode::kGreedy);
  CHECK(greedy.mode == "greedy");
  CHECK(greedy.ratio == Approx(7.0 / 16));

  // forcing exact past the cap is a hard error, not a fallback
  CHECK_THROWS_AS(folner_ratio(make_torus(8, 8), 32, FolnerMode::kExact),
                  ResourceError);
}

TEST_CASE("folner: torus beats the expander at equal size and degree") {
  FolnerReport torus = folner_ratio(make_torus(8, 8), 32, FolnerMode::kGreedy);
  Graph cay = cayley_graph(FiniteGroup::enumerate(sl_generators(2, 7))).graph;
  FolnerReport expander = folner_ratio(cay, 32, FolnerMode::kGreedy);
  CHECK(torus.ratio < expander.ratio);
}

TEST_CASE("discrete cheeger inequalities on the small suite") {
  std::vector<Graph> suite;
  for (int n = 3; n <= 12; ++n) suite.push_back(make_cycle(n));
  for (int n = 3; n <= 6; ++n) suite.push_back(make_complete(n));
  suite.push_back(make_petersen());
  suite.push_back(make_torus(3, 3));
  suite.push_back(make_torus(4, 4));
  for (const Graph& g : suite) {
    SpectralReport sp = spectrum(g);
    CheegerReport ch = cheeger_exact(g);
    double mu = sp.gap;
    double d = sp.k;
    CHECK(d * mu / 2 <= ch.h + 1e-9);
    CHECK(ch.h <= d * std::sqrt(2 * mu) + 1e-9);
  }
}

TEST_CASE("parallel kernels match serial") {
  for (const Graph& g : {make_torus(4, 4), make_petersen(), make_cycle(12)}) {
    CheegerReport cs = cheeger_exact(g, {}, Exec::kSerial);
    CheegerReport cp = cheeger_exact(g, {}, Exec::kParallel);
    CHECK(cs.h == cp.h);
    CHECK(cs.witness_a == cp.witness_a);

    ExpanderReport es = expander_constant(g, {}, Exec::kSerial);
    ExpanderReport ep = expander_constant(g, {}, Exec::kParallel);
    CHECK(es.c == ep.c);
    CHECK(es.witness == ep.witness);
  }
  Graph t = make_torus(6, 6);
  FolnerReport fs = folner_ratio(t, 18, FolnerMode::kGreedy, {}, Exec::kSerial);
  FolnerReport fp = folner_ratio(t, 18, FolnerMode::kGreedy, {}, Exec::kParallel);
  CHECK(fs.ratio == fp.ratio);
  CHECK(fs.witness == fp.witness);
}
