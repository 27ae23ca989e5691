#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "egt/action.hpp"
#include "egt/config.hpp"
#include "egt/graph.hpp"
#include "egt/metric.hpp"

namespace egt {

// Symmetric real kernel with zero diagonal on a finite labeled point set.
class Kernel {
 public:
  explicit Kernel(Eigen::MatrixXd values,
                  std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(values_.rows()); }
  double operator()(int i, int j) const { return values_(i, j); }
  const Eigen::MatrixXd& values() const { return values_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double max_abs() const;

 private:
  Eigen::MatrixXd values_;
  std::vector<std::string> labels_;
};

// d^p on the graph's edge-path metric (p = 0: off-diagonal 1).
Kernel kernel_from_metric(const Graph& g, double exponent);
Kernel kernel_from_metric(const DistanceMatrix& d, double exponent);
Kernel zero_kernel(int n);

struct CndVerdict {
  bool is_cnd = false;
  double max_centered_eigenvalue = 0.0;
  // Empty when CND.  Otherwise a zero-sum coefficient vector scaled to
  // max|c| = 1 whose quadratic form is positive.
  std::vector<double> witness;
  double witness_form_value = 0.0;
};

// CND test via the eigenvalues of J H J with J = I - (1/n) 11^T; the
// quadratic form on zero-sum vectors is nonpositive iff the centered matrix
// has no eigenvalue above tol_rel * max|h|.
CndVerdict is_negative_kernel(const Kernel& k, double tol_rel = 1e-8);

double kernel_form_value(const Kernel& k, const std::vector<double>& c);

struct QuasiTriangleReport {
  bool holds = false;
  double worst_slack = 0.0;  // max of h(a,b) - 2(h(a,c) + h(c,b))
  std::array<int, 3> worst_triple{};
};
QuasiTriangleReport quasi_triangle_check(const Kernel& k,
                                         Exec exec = Exec::kParallel);

struct InvarianceReport {
  bool invariant = false;
  double worst = 0.0;
  int worst_element = -1, worst_u = -1, worst_v = -1;
  bool exhaustive = true;
};
InvarianceReport invariance_check(const Kernel& k, const GroupAction& a,
                                  double tol, const RunConfig& cfg = {});

// h_x(g1, g2) = h(g1 x, g2 x), a kernel on the acting group.
Kernel restrict_to_orbit(const Kernel& k, const GroupAction& a, int x);

struct BoundCertificate {
  double k_bound = 0.0;  // max over orbit reps x and elements g of h(g x, x)
  double l_bound = 0.0;  // max over rep pairs of h(x_i, x_j)
  double max_h = 0.0;
  double bound = 0.0;    // 6K + 4L
  bool holds = false;
  double slack = 0.0;    // bound - max_h
  std::vector<int> representatives;
};

// Requires a CND, invariant kernel (precondition errors name the failing
// part); checks max h <= 6K + 4L.
BoundCertificate bound_certificate(const Kernel& k, const GroupAction& a,
                                   const RunConfig& cfg = {});

struct SupExponentResult {
  double p_lo = 0.0, p_hi = 0.0;  // d^{p_lo} CND, d^{p_hi} not (or cap)
  bool capped = false;
  std::vector<std::pair<double, bool>> probes;  // (exponent, is_cnd)
};

// sup { p : d^p is CND } by bisection on [0, 8]; probe results are checked
// for monotone consistency and an inconsistency aborts with a diagnostic.
SupExponentResult cnd_sup_exponent(const Graph& g, double tol_p = 1e-4,
                                   const RunConfig& cfg = {});
SupExponentResult cnd_sup_exponent(const DistanceMatrix& d, double tol_p = 1e-4,
                                   const RunConfig& cfg = {});

struct RoundnessWitness {
  int n = 0;
  std::vector<int> a, b;
  double q = 0.0, lhs = 0.0, rhs = 0.0;
};

struct RoundnessEstimate {
  double q_lower = 0.0;  // largest probed exponent without a violation (evidence)
  double q_upper = 0.0;  // smallest probed exponent with a witness (true bound)
  bool capped = false;
  std::optional<RoundnessWitness> witness;
  bool fully_exhaustive = true;
  std::vector<std::string> scope;  // search scope per configuration size
  bool crosscheck_performed = false;
  bool crosscheck_ok = false;
  double crosscheck_p_lo = 0.0, crosscheck_p_hi = 0.0;
};

// Bisection on q with a violation search over 2n-point configurations
// (repetition allowed), n = 2..n_max.  Exhaustive per size when the tuple
// count fits the cap; otherwise a deterministic common-neighbor sweep plus
// seeded uniform samples.  In fully exhaustive mode the result is
// cross-checked against cnd_sup_exponent.
RoundnessEstimate roundness_estimate(const Graph& g, int n_max = 4,
                                     double tol_q = 1e-4,
                                     const RunConfig& cfg = {});
RoundnessEstimate roundness_estimate(const DistanceMatrix& d, int n_max = 4,
                                     double tol_q = 1e-4,
                                     const RunConfig& cfg = {});

}  // namespace egt
