#include "nred/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nred/kernels.hpp"
#include "nred/linalg.hpp"

namespace nred {

LieAlgebraData::LieAlgebraData(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), c_(static_cast<std::size_t>(dim) * dim * dim, 0.0) {
  if (labels_.empty())
    for (int i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i + 1));
  if (static_cast<int>(labels_.size()) != dim) throw std::invalid_argument("label count differs from dimension");
}

void LieAlgebraData::set_bracket(int i, int j, int k, double value) {
  c_[(i * dim_ + j) * dim_ + k] = value;
  c_[(j * dim_ + i) * dim_ + k] = -value;
}

void LieAlgebraData::add_bracket(int i, int j, int k, double value) {
  c_[(i * dim_ + j) * dim_ + k] += value;
  c_[(j * dim_ + i) * dim_ + k] -= value;
}

Eigen::VectorXd LieAlgebraData::bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y(j) == 0.0) continue;
      double s = x(i) * y(j);
      for (int k = 0; k < dim_; ++k) out(k) += s * c(i, j, k);
    }
  }
  return out;
}

Eigen::MatrixXd LieAlgebraData::ad(const Eigen::VectorXd& x) const {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) == 0.0) continue;
    A += x(i) * ad_basis(i);
  }
  return A;
}

Eigen::MatrixXd LieAlgebraData::ad_basis(int i) const {
  Eigen::MatrixXd A(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) A(k, j) = c(i, j, k);
  return A;
}

double LieAlgebraData::antisymmetry_residual() const {
  double r = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) r = std::max(r, std::abs(c(i, j, k) + c(j, i, k)));
  return r;
}

LieAlgebraData LieAlgebraData::change_basis(const Eigen::MatrixXd& P, std::vector<std::string> labels) const {
  if (P.rows() != dim_ || P.cols() != dim_) throw std::invalid_argument("change_basis: size mismatch");
  Eigen::MatrixXd Pinv = P.inverse();
  LieAlgebraData out(dim_, labels.empty() ? labels_ : std::move(labels));
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) {
      Eigen::VectorXd v = Pinv * bracket(P.col(a), P.col(b));
      for (int k = 0; k < dim_; ++k) out.c_[(a * dim_ + b) * dim_ + k] = v(k);
    }
  if (inner_product) out.inner_product = P.transpose() * (*inner_product) * P;
  return out;
}

namespace {

Eigen::VectorXd flatten(const Eigen::MatrixXcd& M) {
  const int s = static_cast<int>(M.size());
  Eigen::VectorXd v(2 * s);
  for (int i = 0; i < s; ++i) {
    v(i) = M.data()[i].real();
    v(s + i) = M.data()[i].imag();
  }
  return v;
}

}  // namespace

LieAlgebraData algebra_from_matrices(const std::vector<Eigen::MatrixXcd>& basis, std::vector<std::string> labels,
                                     double* residual) {
  const int d = static_cast<int>(basis.size());
  if (d == 0) throw std::invalid_argument("empty basis");
  Eigen::MatrixXd B(2 * basis[0].size(), d);
  for (int i = 0; i < d; ++i) B.col(i) = flatten(basis[i]);
  auto qr = B.completeOrthogonalDecomposition();
  LieAlgebraData L(d, std::move(labels));
  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Eigen::VectorXd v = flatten(basis[i] * basis[j] - basis[j] * basis[i]);
      Eigen::VectorXd x = qr.solve(v);
      worst = std::max(worst, (B * x - v).norm());
      for (int k = 0; k < d; ++k)
        if (std::abs(x(k)) > 1e-14) L.set_bracket(i, j, k, x(k));
    }
  if (residual) *residual = worst;
  return L;
}

JacobiResult jacobi_check(const LieAlgebraData& L, double eps) {
  JacobiResult r;
  r.max_residual = jacobi_residual_parallel(L);
  r.passes = r.max_residual <= eps;
  return r;
}

LieAlgebraData restrict_to(const LieAlgebraData& L, const Eigen::MatrixXd& B, double* residual,
                           std::vector<std::string> labels) {
  const int k = static_cast<int>(B.cols());
  auto qr = B.completeOrthogonalDecomposition();
  LieAlgebraData out(k, std::move(labels));
  double worst = 0.0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      Eigen::VectorXd v = L.bracket(B.col(a), B.col(b));
      Eigen::VectorXd x = qr.solve(v);
      worst = std::max(worst, (B * x - v).norm());
      for (int m = 0; m < k; ++m)
        if (x(m) != 0.0) out.set_bracket(a, b, m, x(m));
    }
  if (residual) *residual = worst;
  return out;
}

}  // namespace nred
