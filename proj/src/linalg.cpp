#include "nred/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace nred {

double rank_threshold(const Eigen::VectorXd& s, double eps_rank) {
  double top = s.size() ? s.maxCoeff() : 0.0;
  return eps_rank * std::max(1.0, top);
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& A, double eps_rank) {
  const int n = static_cast<int>(A.cols());
  if (n == 0) return Eigen::MatrixXd(0, 0);
  if (A.rows() == 0) return Eigen::MatrixXd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  double thr = rank_threshold(s, eps_rank);
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > thr) ++r;
  return svd.matrixV().rightCols(n - r);
}

Eigen::MatrixXd range_basis(const Eigen::MatrixXd& A, double eps_rank) {
  if (A.cols() == 0 || A.rows() == 0) return Eigen::MatrixXd(A.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  double thr = rank_threshold(s, eps_rank);
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > thr) ++r;
  return svd.matrixU().leftCols(r);
}

int numerical_rank(const Eigen::MatrixXd& A, double eps_rank) {
  if (A.cols() == 0 || A.rows() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  const Eigen::VectorXd& s = svd.singularValues();
  double thr = rank_threshold(s, eps_rank);
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > thr) ++r;
  return r;
}

Eigen::VectorXd solve_in_span(const Eigen::MatrixXd& B, const Eigen::VectorXd& v, double* residual) {
  if (B.cols() == 0) {
    if (residual) *residual = v.norm();
    return Eigen::VectorXd(0);
  }
  Eigen::VectorXd x = B.completeOrthogonalDecomposition().solve(v);
  if (residual) *residual = (B * x - v).norm();
  return x;
}

Inertia inertia(const Eigen::MatrixXd& S, double eps_rank) {
  Inertia out;
  if (S.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (S + S.transpose()));
  const Eigen::VectorXd& ev = es.eigenvalues();
  double thr = eps_rank * std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) > thr) ++out.pos;
    else if (ev(i) < -thr) ++out.neg;
    else ++out.zero;
  }
  return out;
}

Eigen::MatrixXd random_orthogonal(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
  Eigen::MatrixXd Q = qr.householderQ();
  Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (R(i, i) < 0) Q.col(i) *= -1.0;
  return Q;
}

}  // namespace nred
