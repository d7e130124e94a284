#pragma once

#include <string>
#include <vector>

#include "nred/curvature.hpp"
#include "nred/lie_algebra.hpp"
#include "nred/multivector.hpp"
#include "nred/skew.hpp"
#include "nred/tolerance.hpp"

namespace nred {

// h is given by a linearly independent basis of skew endomorphisms of V that spans a
// subalgebra; it need not be orthonormal.
struct NomizuData {
  int dim_V = 0;
  std::vector<SkewEndo> h;
  std::vector<std::string> h_labels;
  Multivector T;
  CurvatureOperator R;
};

struct NomizuDiagnostics {
  double h_closure = 0.0;
  double t_invariance = 0.0;
  double r_image = 0.0;
  double r_equivariance = 0.0;
  double r_symmetry = 0.0;
  // Names the first violated precondition, empty if none.
  std::string failure(const Tolerance& tol) const;
};

struct NomizuError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

NomizuDiagnostics check_nomizu(const NomizuData& d);

// Basis order: h elements, then e_1..e_n. Brackets
// [A+X, B+Y] = ([A,B] - R(X,Y)) + (AY - BX - T(X,Y)).
LieAlgebraData build_lie_algebra(const NomizuData& d, const Tolerance& tol = {});

struct CheckResult {
  bool passes = false;
  double residual = 0.0;
};

// cyclic_{X,Y,Z} R(X,Y,Z,V) = sigma_T(X,Y,Z,V)
CheckResult bianchi1_check(const Multivector& T, const CurvatureOperator& R, const Tolerance& tol = {});
// cyclic_{X,Y,Z} R(T(X,Y),Z) = 0
CheckResult bianchi2_check(const Multivector& T, const CurvatureOperator& R, const Tolerance& tol = {});

struct TransversalResult {
  LieAlgebraData algebra;
  Eigen::MatrixXd basis;  // independent candidate columns actually used
  int intersection_dim = 0;
  double closure_residual = 0.0;
};

struct NotClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// candidate: columns in the coordinates of L; h_idx: basis indices spanning the isotropy part.
TransversalResult transversal_subalgebra(const LieAlgebraData& L, const Eigen::MatrixXd& candidate,
                                         const std::vector<int>& h_idx, const Tolerance& tol = {});

}  // namespace nred
