#pragma once

// Minimum-norm point of a polyhedron {x : A x >= b} under the norm x^T H x,
// by a primal active-set method started from a feasible point.

#include <Eigen/Dense>

namespace weylgrowth {

struct MinNormResult {
  Eigen::VectorXd x;
  Eigen::VectorXd multipliers;  // one per row of A; zero off the final working set
  int iterations = 0;
  bool converged = false;
};

MinNormResult min_norm_point(const Eigen::MatrixXd& h, const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                             const Eigen::VectorXd& x0, int max_iter = 1000, double tol = 1e-11);

}  // namespace weylgrowth
