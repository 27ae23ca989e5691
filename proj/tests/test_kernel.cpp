#include <doctest.h>

#include <cmath>
#include <random>

#include "egt/errors.hpp"
#include "egt/group.hpp"
#include "egt/kernel.hpp"

using namespace egt;
using doctest::Approx;

namespace {

Kernel random_kernel(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> val(0.0, 4.0);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h(i, j) = h(j, i) = val(rng);
  return Kernel(std::move(h));
}

double roundness_sides(const DistanceMatrix& d, const RoundnessWitness& w,
                       bool lhs_side) {
  double lhs = 0, rhs = 0;
  auto pw = [&](int dist) {
    return dist == 0 ? 0.0 : std::pow(static_cast<double>(dist), w.q);
  };
  for (int i = 0; i < w.n; ++i) {
    for (int j = i + 1; j < w.n; ++j)
      lhs += pw(d(w.a[i], w.a[j])) + pw(d(w.b[i], w.b[j]));
    for (int j = 0; j < w.n; ++j) rhs += pw(d(w.a[i], w.b[j]));
  }
  return lhs_side ? lhs : rhs;
}

}  // namespace

TEST_CASE("kernel construction and validation") {
  Kernel c4d2 = kernel_from_metric(make_cycle(4), 2.0);
  CHECK(c4d2(0, 1) == 1.0);
  CHECK(c4d2(0, 2) == 4.0);
  CHECK(c4d2(0, 0) == 0.0);

  Kernel d1 = kernel_from_metric(make_path(3), 1.0);
  CHECK(d1(0, 2) == 2.0);

  Kernel d0 = kernel_from_metric(make_path(3), 0.0);
  CHECK(d0(0, 2) == 1.0);
  CHECK(d0(0, 1) == 1.0);

  Eigen::MatrixXd bad(2, 2);
  bad << 0, 1, 2, 0;
  CHECK_THROWS_AS(Kernel{bad}, ValidationError);
  Eigen::MatrixXd diag(2, 2);
  diag << 1, 0, 0, 0;
  CHECK_THROWS_AS(Kernel{diag}, ValidationError);

  CHECK_THROWS_AS(kernel_from_metric(build_graph(3, {{0, 1}}), 1.0),
                  ValidationError);
}

TEST_CASE("cnd verdicts") {
  CHECK(is_negative_kernel(zero_kernel(5)).is_cnd);

  // C4 with squared distances: the alternating vector is a witness
  CndVerdict c4 = is_negative_kernel(kernel_from_metric(make_cycle(4), 2.0));
  CHECK_FALSE(c4.is_cnd);
  CHECK(c4.max_centered_eigenvalue == Approx(2.0).epsilon(1e-9));
  REQUIRE(c4.witness.size() == 4);
  double sum = 0;
  for (double x : c4.witness) sum += x;
  CHECK(std::abs(sum) <= 1e-12);
  CHECK(c4.witness_form_value == Approx(8.0).epsilon(1e-9));
  // recompute the double sum independently
  Kernel k = kernel_from_metric(make_cycle(4), 2.0);
  double form = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) form += c4.witness[i] * c4.witness[j] * k(i, j);
  CHECK(form == Approx(c4.witness_form_value).epsilon(1e-9));

  // points 0,1,2 on a line with squared distances: CND
  CHECK(is_negative_kernel(kernel_from_metric(make_path(3), 2.0)).is_cnd);
  // even cycles embed in l1, so d itself is CND
  CHECK(is_negative_kernel(kernel_from_metric(make_cycle(6), 1.0)).is_cnd);
}

TEST_CASE("cnd verdict is relabeling-invariant") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Kernel k = random_kernel(6, rng);
    CndVerdict base = is_negative_kernel(k);
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Eigen::MatrixXd h(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) h(perm[i], perm[j]) = k(i, j);
    CndVerdict conj = is_negative_kernel(Kernel(std::move(h)));
    CHECK(base.is_cnd == conj.is_cnd);
    CHECK(base.max_centered_eigenvalue ==
          Approx(conj.max_centered_eigenvalue).epsilon(1e-9));
  }
}

TEST_CASE("quasi triangle") {
  QuasiTriangleReport metric = quasi_triangle_check(
      kernel_from_metric(make_cycle(6), 1.0));
  CHECK(metric.holds);

  QuasiTriangleReport zero = quasi_triangle_check(zero_kernel(4));
  CHECK(zero.holds);
  CHECK(zero.worst_slack == 0.0);

  QuasiTriangleReport c4d2 = quasi_triangle_check(
      kernel_from_metric(make_cycle(4), 2.0));
  CHECK(c4d2.worst_slack == Approx(0.0));
  CHECK(c4d2.holds);

  // CND kernels satisfy it (consequence of the c = (1,1,-2) instance)
  for (const Graph& g : {make_cycle(6), make_path(4), make_cycle(8)}) {
    Kernel k = kernel_from_metric(g, 1.0);
    REQUIRE(is_negative_kernel(k).is_cnd);
    CHECK(quasi_triangle_check(k).holds);
  }

  // parallel matches serial, including the argmax triple
  Kernel k = kernel_from_metric(make_petersen(), 1.5);
  QuasiTriangleReport s = quasi_triangle_check(k, Exec::kSerial);
  QuasiTriangleReport p = quasi_triangle_check(k, Exec::kParallel);
  CHECK(s.worst_slack == p.worst_slack);
  CHECK(s.worst_triple == p.worst_triple);
}

TEST_CASE("negative verdicts always ship sound witnesses") {
  std::mt19937_64 rng(41);
  int negatives = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Kernel k = random_kernel(7, rng);
    CndVerdict v = is_negative_kernel(k);
    if (v.is_cnd) continue;
    ++negatives;
    REQUIRE(v.witness.size() == 7);
    double sum = 0, mx = 0;
    for (double c : v.witness) {
      sum += c;
      mx = std::max(mx, std::abs(c));
    }
    CHECK(std::abs(sum) <= 1e-12);
    CHECK(mx == Approx(1.0));
    CHECK(kernel_form_value(k, v.witness) ==
          Approx(v.witness_form_value).epsilon(1e-9));
    CHECK(v.witness_form_value > 0.0);
  }
  CHECK(negatives > 0);  // random kernels are rarely CND
}

TEST_CASE("sampled invariance still finds planted violations") {
  FiniteGroup z6 = cyclic_group(6);
  CayleyGraph cay = cayley_graph(z6);
  GroupAction act = left_translation_action(z6, cay);
  Eigen::MatrixXd h = kernel_from_metric(cay.graph, 1.0).values();
  h(0, 1) += 0.5;
  h(1, 0) += 0.5;
  RunConfig cfg;
  cfg.caps.config_exhaustive = 10;  // force the sampled path
  InvarianceReport rep = invariance_check(Kernel{h}, act, 1e-9, cfg);
  CHECK_FALSE(rep.exhaustive);
  CHECK_FALSE(rep.invariant);
  CHECK(rep.worst == Approx(0.5));

  // same seed, same verdict and location
  InvarianceReport again = invariance_check(Kernel{h}, act, 1e-9, cfg);
  CHECK(rep.worst_element == again.worst_element);
  CHECK(rep.worst_u == again.worst_u);
  CHECK(rep.worst_v == again.worst_v);
}

TEST_CASE("sampled roundness is seed-deterministic") {
  Graph t = make_torus(3, 3);  // 9 vertices: 9^6 > 1e5 forces sampling at n=3
  RunConfig cfg;
  cfg.caps.config_exhaustive = 100'000;
  cfg.sample_count = 2'000;
  RoundnessEstimate a = roundness_estimate(t, 3, 1e-3, cfg);
  RoundnessEstimate b = roundness_estimate(t, 3, 1e-3, cfg);
  CHECK_FALSE(a.fully_exhaustive);
  CHECK(a.q_upper == b.q_upper);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(a.witness->a == b.witness->a);
  CHECK(a.witness->b == b.witness->b);
  bool sweep_mentioned = false;
  for (const auto& s : a.scope)
    if (s.find("sweep") != std::string::npos) sweep_mentioned = true;
  CHECK(sweep_mentioned);
}

TEST_CASE("invariance checks") {
  FiniteGroup z6 = cyclic_group(6);
  CayleyGraph cay = cayley_graph(z6);
  GroupAction act = left_translation_action(z6, cay);
  Kernel d1 = kernel_from_metric(cay.graph, 1.0);

  InvarianceReport ok = invariance_check(d1, act, 1e-9);
  CHECK(ok.invariant);
  CHECK(ok.exhaustive);
  CHECK(ok.worst == 0.0);

  Eigen::MatrixXd h = d1.values();
  h(0, 1) += 0.5;
  h(1, 0) += 0.5;
  InvarianceReport bad = invariance_check(Kernel(std::move(h)), act, 1e-9);
  CHECK_FALSE(bad.invariant);
  CHECK(bad.worst == Approx(0.5));

  CHECK_THROWS_AS(invariance_check(zero_kernel(5), act, 1e-9),
                  ValidationError);
}

TEST_CASE("restrict to orbit") {
  FiniteGroup z6 = cyclic_group(6);
  CayleyGraph cay = cayley_graph(z6);
  GroupAction act = left_translation_action(z6, cay);
  Kernel d1 = kernel_from_metric(cay.graph, 1.0);

  // transitive free action: h_x is h reindexed, CND verdicts agree
  Kernel hx = restrict_to_orbit(d1, act, 0);
  CHECK(hx.size() == 6);
  CHECK(is_negative_kernel(hx).is_cnd == is_negative_kernel(d1).is_cnd);

  // all-identity permutations: h_x vanishes
  GroupAction idact = action_from_perms(
      {{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}});
  Kernel zero = restrict_to_orbit(d1, idact, 2);
  CHECK(zero.max_abs() == 0.0);
}

TEST_CASE("orbit restriction matches the orbit submatrix") {
  ReductionData r = make_reduction(2, 9, 3);
  CayleyGraph cay = cayley_graph(r.source);
  GroupAction act = left_translation_action(r.source, cay, r.hom.kernel);
  Kernel d1 = kernel_from_metric(cay.graph, 1.0);
  Kernel hx = restrict_to_orbit(d1, act, 0);
  CHECK(hx.size() == 27);

  VertexSet orbit;
  for (const auto& p : act.perms) orbit.push_back(p[0]);
  std::sort(orbit.begin(), orbit.end());
  Kernel sub = kernel_from_metric(bfs_metric(cay.graph).restrict(orbit), 1.0);
  CHECK(is_negative_kernel(hx).is_cnd == is_negative_kernel(sub).is_cnd);
}

TEST_CASE("bound certificates") {
  FiniteGroup z6 = cyclic_group(6);
  CayleyGraph cay = cayley_graph(z6);
  GroupAction full = left_translation_action(z6, cay);
  Kernel d1 = kernel_from_metric(cay.graph, 1.0);

  BoundCertificate cert = bound_certificate(d1, full);
  CHECK(cert.k_bound == Approx(3.0));
  CHECK(cert.l_bound == Approx(0.0));
  CHECK(cert.bound == Approx(18.0));
  CHECK(cert.max_h == Approx(3.0));
  CHECK(cert.holds);

  BoundCertificate zero = bound_certificate(zero_kernel(6), full);
  CHECK(zero.bound == 0.0);
  CHECK(zero.max_h == 0.0);
  CHECK(zero.holds);

  // two orbits: rotations by even steps only (the order-3 subgroup)
  std::vector<int> evens;
  for (int i = 0; i < 6; ++i)
    if (z6.mul(i, z6.mul(i, i)) == 0) evens.push_back(i);
  GroupAction sub = left_translation_action(z6, cay, evens);
  REQUIRE(sub.size() == 3);
  BoundCertificate two = bound_certificate(d1, sub);
  CHECK(two.representatives.size() == 2);
  CHECK(two.k_bound == Approx(2.0));
  CHECK(two.l_bound == Approx(1.0));
  CHECK(two.bound == Approx(16.0));
  CHECK(two.holds);

  // preconditions are named
  CHECK_THROWS_WITH_AS(
      bound_certificate(kernel_from_metric(make_cycle(4), 2.0),
                        action_from_perms({{0, 1, 2, 3}, {1, 2, 3, 0},
                                           {2, 3, 0, 1}, {3, 0, 1, 2}})),
      doctest::Contains("not CND"), ValidationError);
  // squared euclidean distances of line points: CND but not invariant
  std::vector<double> x{0, 1, 2, 3, 4, 10};
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) h(i, j) = (x[i] - x[j]) * (x[i] - x[j]);
  REQUIRE(is_negative_kernel(Kernel{h}).is_cnd);
  CHECK_THROWS_WITH_AS(bound_certificate(Kernel{h}, full),
                       doctest::Contains("not invariant"), ValidationError);
}

TEST_CASE("sup exponent") {
  SupExponentResult p3 = cnd_sup_exponent(make_path(3));
  CHECK_FALSE(p3.capped);
  CHECK(p3.p_lo >= 2.0 - 1e-3);
  CHECK(p3.p_hi >= 2.0);
  CHECK(p3.p_hi - p3.p_lo <= 1e-4 + 1e-12);

  SupExponentResult c4 = cnd_sup_exponent(make_cycle(4));
  CHECK(c4.p_hi < 2.0);
  CHECK(c4.p_lo == Approx(1.0).epsilon(1e-6));

  SupExponentResult k2 = cnd_sup_exponent(build_graph(2, {{0, 1}}));
  CHECK(k2.capped);
  CHECK(k2.p_hi == 8.0);

  // probes recorded and monotone
  for (std::size_t i = 0; i < c4.probes.size(); ++i)
    for (std::size_t j = 0; j < c4.probes.size(); ++j)
      if (c4.probes[i].second && !c4.probes[j].second)
        CHECK(c4.probes[i].first < c4.probes[j].first);

  // any graph containing three vertices on a geodesic stays below the
  // two-point cap and in fact below 2 (a P3 witness kills d^p for p > 2)
  for (const Graph& g :
       {make_cycle(6), make_path(4), make_petersen(), make_torus(3, 3)}) {
    SupExponentResult r = cnd_sup_exponent(g);
    CHECK_FALSE(r.capped);
    CHECK(r.p_hi <= 2.0 * (1.0 + 1e-4) + 1e-4);
  }
}

TEST_CASE("roundness estimates") {
  RoundnessEstimate p3 = roundness_estimate(make_path(3));
  CHECK_FALSE(p3.capped);
  CHECK(p3.fully_exhaustive);
  CHECK(p3.q_upper >= 2.0);
  CHECK(p3.q_upper <= 2.0 + 1e-3);
  CHECK(p3.q_lower >= 2.0 - 1e-4 - 1e-12);
  REQUIRE(p3.witness.has_value());
  CHECK(p3.witness->a == std::vector<int>{0, 2});
  CHECK(p3.witness->b == std::vector<int>{1, 1});
  CHECK(p3.crosscheck_performed);
  CHECK(p3.crosscheck_ok);

  // witness sides recompute to a violation
  auto d = bfs_metric(make_path(3));
  CHECK(roundness_sides(d, *p3.witness, true) >
        roundness_sides(d, *p3.witness, false));
  CHECK(p3.witness->lhs ==
        Approx(roundness_sides(d, *p3.witness, true)).epsilon(1e-9));

  RoundnessEstimate k2 = roundness_estimate(build_graph(2, {{0, 1}}));
  CHECK(k2.capped);
  CHECK(k2.q_upper == 8.0);

  RoundnessEstimate c4 = roundness_estimate(make_cycle(4));
  CHECK(c4.q_upper == Approx(1.0).epsilon(1e-3));
  CHECK(c4.crosscheck_ok);

  RoundnessEstimate c6 = roundness_estimate(make_cycle(6));
  CHECK(c6.q_upper == Approx(1.0).epsilon(1e-3));
  CHECK(c6.crosscheck_ok);
}
