#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nred {

// [b_i, b_j] = sum_k c(i,j,k) b_k
class LieAlgebraData {
 public:
  LieAlgebraData() = default;
  explicit LieAlgebraData(int dim, std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double c(int i, int j, int k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  // Sets c(i,j,k) and c(j,i,k) = -value.
  void set_bracket(int i, int j, int k, double value);
  void add_bracket(int i, int j, int k, double value);

  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;  // column j = [x, b_j]
  Eigen::MatrixXd ad_basis(int i) const;
  double antisymmetry_residual() const;

  std::optional<Eigen::MatrixXd> inner_product;

  // New basis b'_a = sum_i P(i,a) b_i.
  LieAlgebraData change_basis(const Eigen::MatrixXd& P, std::vector<std::string> labels = {}) const;

 private:
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<double> c_;
};

// Structure constants of the span of the given matrices (assumed linearly independent and closed).
// Returns the closure residual through *residual.
LieAlgebraData algebra_from_matrices(const std::vector<Eigen::MatrixXcd>& basis, std::vector<std::string> labels,
                                     double* residual = nullptr);

struct JacobiResult {
  bool passes = false;
  double max_residual = 0.0;
};
JacobiResult jacobi_check(const LieAlgebraData& L, double eps = 1e-9);

// Restriction to a subspace spanned by the columns of B (assumed closed); coordinates by least squares.
LieAlgebraData restrict_to(const LieAlgebraData& L, const Eigen::MatrixXd& B, double* residual = nullptr,
                           std::vector<std::string> labels = {});

}  // namespace nred
