#include "weylgrowth/min_norm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace weylgrowth {

namespace {

bool independent_of(const Eigen::MatrixXd& a, const std::vector<int>& work, int row) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(work.size()) + 1, a.cols());
  for (std::size_t k = 0; k < work.size(); ++k) m.row(static_cast<Eigen::Index>(k)) = a.row(work[k]);
  m.row(m.rows() - 1) = a.row(row);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-10);
  return qr.rank() == m.rows();
}

}  // namespace

MinNormResult min_norm_point(const Eigen::MatrixXd& h, const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                             const Eigen::VectorXd& x0, int max_iter, double tol) {
  const Eigen::Index n = h.rows();
  const Eigen::Index m = a.rows();
  if (h.cols() != n || a.cols() != n || b.size() != m || x0.size() != n)
    throw std::invalid_argument("min_norm_point: inconsistent dimensions");
  MinNormResult out;
  out.x = x0;
  out.multipliers = Eigen::VectorXd::Zero(m);
  const double scale = 1.0 + b.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < m; ++i)
    if (a.row(i).dot(x0) < b(i) - 1e-8 * scale * (1 + a.row(i).norm() * x0.norm()))
      throw std::invalid_argument("min_norm_point: starting point is infeasible");

  std::vector<int> work;
  for (Eigen::Index i = 0; i < m && static_cast<Eigen::Index>(work.size()) < n; ++i)
    if (std::abs(a.row(i).dot(out.x) - b(i)) <= tol * scale * (1 + out.x.norm()) &&
        independent_of(a, work, static_cast<int>(i)))
      work.push_back(static_cast<int>(i));

  for (out.iterations = 0; out.iterations < max_iter; ++out.iterations) {
    const Eigen::Index k = static_cast<Eigen::Index>(work.size());
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n + k, n + k);
    kkt.topLeftCorner(n, n) = h;
    for (Eigen::Index r = 0; r < k; ++r) {
      kkt.block(n + r, 0, 1, n) = a.row(work[static_cast<std::size_t>(r)]);
      kkt.block(0, n + r, n, 1) = -a.row(work[static_cast<std::size_t>(r)]).transpose();
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + k);
    rhs.head(n) = -(h * out.x);
    const Eigen::VectorXd sol = kkt.fullPivLu().solve(rhs);
    const Eigen::VectorXd p = sol.head(n);
    const Eigen::VectorXd lambda = sol.tail(k);

    if (p.norm() <= tol * (1 + out.x.norm())) {
      Eigen::Index worst = -1;
      double most_negative = -tol * (1 + lambda.cwiseAbs().maxCoeff());
      for (Eigen::Index r = 0; r < k; ++r)
        if (lambda(r) < most_negative) {
          most_negative = lambda(r);
          worst = r;
        }
      if (worst < 0) {
        out.multipliers.setZero();
        for (Eigen::Index r = 0; r < k; ++r) out.multipliers(work[static_cast<std::size_t>(r)]) = lambda(r);
        out.converged = true;
        return out;
      }
      work.erase(work.begin() + worst);
      continue;
    }

    double step = 1.0;
    int blocking = -1;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (std::find(work.begin(), work.end(), static_cast<int>(i)) != work.end()) continue;
      const double ap = a.row(i).dot(p);
      if (ap >= -tol * a.row(i).norm() * p.norm()) continue;
      const double s = std::max(0.0, (b(i) - a.row(i).dot(out.x)) / ap);
      if (s < step) {
        step = s;
        blocking = static_cast<int>(i);
      }
    }
    out.x += step * p;
    if (blocking >= 0) work.push_back(blocking);
  }
  return out;
}

}  // namespace weylgrowth
