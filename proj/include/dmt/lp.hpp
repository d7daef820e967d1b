#pragma once

// Dense primal simplex for small problems of the form
//
//   maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0.
//
// b >= 0 makes the origin a feasible basis, so no phase one is needed.
// Bland's rule is used for pivoting, which rules out cycling.

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dmt {

template <typename Scalar>
struct LpSolution {
  Scalar value;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
};

template <typename Scalar>
LpSolution<Scalar> maximize_nonneg(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                                   const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b,
                                   const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c,
                                   Scalar eps = Scalar(1e-12)) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (b.size() != m || c.size() != n) throw std::invalid_argument("lp: dimension mismatch");
  if (m > 0 && b.minCoeff() < -eps) throw std::invalid_argument("lp: requires b >= 0");

  // Tableau rows 0..m-1 are constraints, row m is the reduced objective.
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> t =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(m + 1, n + m + 1);
  t.topLeftCorner(m, n) = a;
  t.block(0, n, m, m).setIdentity();
  t.col(n + m).head(m) = b.cwiseMax(Scalar(0));
  t.row(m).head(n) = -c.transpose();

  Eigen::VectorXi basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis(i) = static_cast<int>(n + i);

  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      if (t(m, j) < -eps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) > eps) {
        const Scalar ratio = t(i, n + m) / t(i, enter);
        if (ratio < best - eps || (ratio <= best + eps && leave >= 0 && basis(i) < basis(leave))) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) throw std::runtime_error("lp: unbounded");

    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i != leave && t(i, enter) != Scalar(0)) t.row(i) -= t(i, enter) * t.row(leave);
    }
    basis(leave) = static_cast<int>(enter);
  }

  LpSolution<Scalar> sol{t(m, n + m), Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n)};
  for (Eigen::Index i = 0; i < m; ++i)
    if (basis(i) < n) sol.x(basis(i)) = t(i, n + m);
  return sol;
}

}  // namespace dmt
