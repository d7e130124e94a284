#pragma once

#include <vector>

#include <Eigen/Dense>

#include "nred/curvature.hpp"
#include "nred/multivector.hpp"
#include "nred/tolerance.hpp"

namespace nred {

// n x n antisymmetric matrix; column i is the image of e_i.
using SkewEndo = Eigen::MatrixXd;

// e_ij -> E_ij with E_ij e_i = e_j, E_ij e_j = -e_i.  A Z = w(Z, .).
SkewEndo two_form_to_endo(const Multivector& w, double eps = 1e-9);
Multivector endo_to_two_form(const SkewEndo& A, double eps = 1e-9);
SkewEndo elementary(int dim, int i, int j);  // E_ij for 1-based i, j

double so_inner(const SkewEndo& A, const SkewEndo& B);  // -1/2 tr(AB)
SkewEndo commutator(const SkewEndo& A, const SkewEndo& B);

// (A.a)(X1..Xk) = -sum_i a(X1, .., A Xi, .., Xk); valid for any square A.
Multivector act_on_form(const Eigen::MatrixXd& A, const Multivector& a);
// Same derivation action on a 4-tensor stored densely (see CurvatureOperator::tensor).
std::vector<double> act_on_tensor4(const Eigen::MatrixXd& A, const std::vector<double>& t, int n);
CurvatureOperator act_on_curvature(const Eigen::MatrixXd& A, const CurvatureOperator& R);

struct SubalgebraBasis {
  int dim_V = 0;
  std::vector<SkewEndo> gens;  // orthonormal for -1/2 tr

  int size() const { return static_cast<int>(gens.size()); }
  // Coefficient vectors of the generators as columns (2-form coordinates).
  Eigen::MatrixXd coordinates() const;
  double closure_residual() const;
};

SubalgebraBasis span_of(int dim, const std::vector<SkewEndo>& gens, const Tolerance& tol = {});
SubalgebraBasis lie_closure(int dim, const std::vector<SkewEndo>& gens, const Tolerance& tol = {});
SubalgebraBasis g_T(const Multivector& T, const Tolerance& tol = {});
SubalgebraBasis isotropy_algebra(const Multivector& T, const Tolerance& tol = {});

// Orthogonal decomposition of R^n into minimal invariant subspaces (orthonormal columns).
std::vector<Eigen::MatrixXd> invariant_subspaces(int dim, const std::vector<SkewEndo>& h, unsigned seed,
                                                 const Tolerance& tol = {});
std::vector<Eigen::MatrixXd> invariant_subspaces(const SubalgebraBasis& h, unsigned seed,
                                                 const Tolerance& tol = {});

}  // namespace nred
