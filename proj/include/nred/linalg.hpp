#pragma once

#include <Eigen/Dense>

namespace nred {

// Threshold for singular values: eps_rank * max(1, largest singular value).
double rank_threshold(const Eigen::VectorXd& singular_values, double eps_rank);

// Orthonormal basis (columns) of the null space of A.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& A, double eps_rank);
// Orthonormal basis (columns) of the column space of A.
Eigen::MatrixXd range_basis(const Eigen::MatrixXd& A, double eps_rank);
int numerical_rank(const Eigen::MatrixXd& A, double eps_rank);

// Least-squares coordinates of v in the columns of B, with the residual norm.
Eigen::VectorXd solve_in_span(const Eigen::MatrixXd& B, const Eigen::VectorXd& v, double* residual);

// Counts of (positive, negative, zero) eigenvalues of a symmetric matrix.
struct Inertia {
  int pos = 0, neg = 0, zero = 0;
  bool operator==(const Inertia&) const = default;
};
Inertia inertia(const Eigen::MatrixXd& S, double eps_rank);

// Random orthogonal matrix from a seeded generator (QR of a Gaussian matrix).
Eigen::MatrixXd random_orthogonal(int n, unsigned seed);

}  // namespace nred
