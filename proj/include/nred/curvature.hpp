#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nred/multivector.hpp"

namespace nred {

// Symmetric operator on 2-forms in the lexicographic basis e_ij (i < j).
// R(X,Y,Z,V) = g(R(X,Y)Z,V) = sum_{I,J} M_IJ (X^Y)_I (Z^V)_J.
class CurvatureOperator {
 public:
  CurvatureOperator() = default;
  explicit CurvatureOperator(int dim);
  CurvatureOperator(int dim, const Eigen::MatrixXd& matrix);

  int dim() const { return dim_; }
  int pairs() const { return dim_ * (dim_ - 1) / 2; }
  const Eigen::MatrixXd& matrix() const { return m_; }

  // 0-based indices, any order.
  double value(int x, int y, int z, int v) const;
  // R(X,Y) as a 2-form for basis vectors (0-based).
  Multivector apply(int x, int y) const;
  Multivector apply(const Multivector& w) const;
  double symmetry_residual() const;
  // Dense 4-tensor R[x][y][z][v] flattened as ((x*n+y)*n+z)*n+v.
  std::vector<double> tensor() const;

  static CurvatureOperator from_tensor(int dim, const std::vector<double>& t);
  // x (.) y = x y^T for x = y, else (x y^T + y x^T) / 2
  static CurvatureOperator sym(const Multivector& x, const Multivector& y);
  // Outer product x y^T + y x^T (cross terms counted once per unordered pair).
  static CurvatureOperator sym_full(const Multivector& x, const Multivector& y);

  CurvatureOperator& operator+=(const CurvatureOperator& o);

 private:
  int dim_ = 0;
  Eigen::MatrixXd m_;
};

CurvatureOperator operator+(CurvatureOperator a, const CurvatureOperator& b);
CurvatureOperator operator*(double s, const CurvatureOperator& a);

// Index of e_ij (0-based i < j) in the lexicographic basis.
int pair_index(int dim, int i, int j);
const std::vector<std::pair<int, int>>& pair_list(int dim);
Eigen::VectorXd two_form_vector(const Multivector& w);

// Algebraic Ricci tensor Ric(X,Y) = sum_i R(X,e_i,e_i,Y) in an orthonormal frame.
Eigen::MatrixXd ricci(const CurvatureOperator& R);

}  // namespace nred
