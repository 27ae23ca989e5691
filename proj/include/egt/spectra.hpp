#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "egt/config.hpp"
#include "egt/graph.hpp"

namespace egt {

struct SpectralReport {
  std::string name;
  int n = 0;
  int k = 0;                          // regularity degree
  std::vector<double> eigenvalues;    // descending; full list when dense,
                                      // extremal Ritz values otherwise
  bool dense = true;
  double lambda = 0.0;                // largest eigenvalue <= 1 - tol.eig
  double gap = 0.0;                   // 1 - lambda
  bool bipartite = false;
  int multiplicity_of_one = 1;
};

// (1/k) * adjacency of a k-regular graph; rejects non-regular and edgeless
// inputs.
Eigen::MatrixXd markov_matrix(const Graph& g);

SpectralReport spectrum(const Graph& g, const RunConfig& cfg = {});

// lambda together with a unit eigenvector for it (dense below the cap,
// Lanczos Ritz vector above); used by the sweep-cut heuristic.
std::pair<double, Eigen::VectorXd> lambda_eigenpair(const Graph& g,
                                                    const RunConfig& cfg = {});

}  // namespace egt
