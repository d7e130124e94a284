#include "nred/curvature.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace nred {

const std::vector<std::pair<int, int>>& pair_list(int dim) {
  static std::vector<std::pair<int, int>> table[kMaxDim + 1];
  static std::once_flag once;
  std::call_once(once, [] {
    for (int n = 0; n <= kMaxDim; ++n)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) table[n].emplace_back(i, j);
  });
  check_dim(dim);
  return table[dim];
}

int pair_index(int dim, int i, int j) {
  // offset of row i plus column
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

Eigen::VectorXd two_form_vector(const Multivector& w) { return w.grade_vector(2); }

CurvatureOperator::CurvatureOperator(int dim) : dim_(dim) {
  check_dim(dim);
  m_ = Eigen::MatrixXd::Zero(pairs(), pairs());
}

CurvatureOperator::CurvatureOperator(int dim, const Eigen::MatrixXd& matrix) : dim_(dim), m_(matrix) {
  check_dim(dim);
  if (m_.rows() != pairs() || m_.cols() != pairs())
    throw std::invalid_argument("curvature matrix has wrong size");
}

double CurvatureOperator::value(int x, int y, int z, int v) const {
  if (x == y || z == v) return 0.0;
  double s = 1.0;
  if (x > y) std::swap(x, y), s = -s;
  if (z > v) std::swap(z, v), s = -s;
  return s * m_(pair_index(dim_, x, y), pair_index(dim_, z, v));
}

Multivector CurvatureOperator::apply(int x, int y) const {
  Multivector w(dim_);
  if (x == y) return w;
  double s = 1.0;
  if (x > y) std::swap(x, y), s = -s;
  Eigen::VectorXd col = s * m_.row(pair_index(dim_, x, y)).transpose();
  return Multivector::from_grade_vector(dim_, 2, col);
}

Multivector CurvatureOperator::apply(const Multivector& w) const {
  return Multivector::from_grade_vector(dim_, 2, m_ * two_form_vector(w));
}

double CurvatureOperator::symmetry_residual() const {
  return (m_ - m_.transpose()).cwiseAbs().maxCoeff();
}

std::vector<double> CurvatureOperator::tensor() const {
  const int n = dim_;
  std::vector<double> t(n * n * n * n, 0.0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int v = 0; v < n; ++v) t[((x * n + y) * n + z) * n + v] = value(x, y, z, v);
  return t;
}

CurvatureOperator CurvatureOperator::from_tensor(int dim, const std::vector<double>& t) {
  CurvatureOperator R(dim);
  const auto& P = pair_list(dim);
  const int n = dim;
  for (std::size_t I = 0; I < P.size(); ++I)
    for (std::size_t J = 0; J < P.size(); ++J) {
      auto [x, y] = P[I];
      auto [z, v] = P[J];
      R.m_(I, J) = t[((x * n + y) * n + z) * n + v];
    }
  return R;
}

CurvatureOperator CurvatureOperator::sym(const Multivector& x, const Multivector& y) {
  Eigen::VectorXd a = two_form_vector(x), b = two_form_vector(y);
  return CurvatureOperator(x.dim(), 0.5 * (a * b.transpose() + b * a.transpose()));
}

CurvatureOperator CurvatureOperator::sym_full(const Multivector& x, const Multivector& y) {
  Eigen::VectorXd a = two_form_vector(x), b = two_form_vector(y);
  return CurvatureOperator(x.dim(), a * b.transpose() + b * a.transpose());
}

CurvatureOperator& CurvatureOperator::operator+=(const CurvatureOperator& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  m_ += o.m_;
  return *this;
}

CurvatureOperator operator+(CurvatureOperator a, const CurvatureOperator& b) { return a += b; }

CurvatureOperator operator*(double s, const CurvatureOperator& a) {
  return CurvatureOperator(a.dim(), s * a.matrix());
}

Eigen::MatrixXd ricci(const CurvatureOperator& R) {
  const int n = R.dim();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int i = 0; i < n; ++i) ric(x, y) += R.value(x, i, i, y);
  return ric;
}

}  // namespace nred
