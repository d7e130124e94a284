#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "nred/curvature.hpp"
#include "nred/lie_algebra.hpp"
#include "nred/multivector.hpp"
#include "nred/nomizu.hpp"
#include "nred/tolerance.hpp"

namespace nred {

// Reductive data g = h + m. All matrices on m act on coordinates in the m basis
// (column b is the image of m_b). Forms on m are given by their components in the m basis.
struct HomogeneousModel {
  LieAlgebraData algebra;
  std::vector<int> h_idx, m_idx;
  Eigen::MatrixXd metric;
  std::vector<Eigen::MatrixXd> isotropy;
  std::optional<std::vector<Eigen::MatrixXd>> lambda;

  int m_dim() const { return static_cast<int>(m_idx.size()); }
  int h_dim() const { return static_cast<int>(h_idx.size()); }
  // [m_a, m_b] split into m and h coordinates
  Eigen::VectorXd bracket_m(int a, int b) const;
  Eigen::VectorXd bracket_h(int a, int b) const;
  Eigen::MatrixXd lambda_of(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd isotropy_of(const Eigen::VectorXd& h) const;
};

// isotropy[h](a,b) = coefficient of m_a in [h, m_b]
std::vector<Eigen::MatrixXd> isotropy_representation(const LieAlgebraData& L, const std::vector<int>& h_idx,
                                                     const std::vector<int>& m_idx);

HomogeneousModel make_model(LieAlgebraData L, std::vector<int> h_idx, std::vector<int> m_idx, Eigen::MatrixXd metric,
                            std::optional<std::vector<Eigen::MatrixXd>> lambda = std::nullopt);

struct ReductiveCheck {
  double h_subalgebra = 0.0;   // [h,h] in h
  double hm_in_m = 0.0;        // [h,m] in m
  double isotropy_skew = 0.0;  // metric-skewness of ad(h)|m
  double lambda_skew = 0.0;    // metric-skewness of Lambda(X)
  bool ok(const Tolerance& tol) const;
};
ReductiveCheck check_reductive(const HomogeneousModel& M);

// <[X,Y]_m, Z> + <Y, [X,Z]_m> = 0
CheckResult naturally_reductive_check(const HomogeneousModel& M, const Tolerance& tol = {});

std::vector<Eigen::MatrixXd> levi_civita_map(const HomogeneousModel& M);
std::vector<Eigen::MatrixXd> characteristic_connection(const HomogeneousModel& M, const Multivector& T);

struct TorsionResult {
  Multivector T;                // skew part, lowered with the metric
  double non_skew_residual = 0.0;
  std::vector<double> lowered;  // T(e_x, e_y, e_z) at ((x*n+y)*n+z)
};
TorsionResult torsion_of(const HomogeneousModel& M, const std::vector<Eigen::MatrixXd>& Lambda);
TorsionResult invariant_torsion(const HomogeneousModel& M);

struct CurvatureResult {
  CurvatureOperator R;
  double symmetry_residual = 0.0;  // pair symmetry R(X,Y,Z,V) = R(Z,V,X,Y)
  std::vector<double> lowered;     // g(R(X,Y)Z, V)
};
CurvatureResult curvature_of(const HomogeneousModel& M, const std::vector<Eigen::MatrixXd>& Lambda);
CurvatureResult invariant_curvature(const HomogeneousModel& M);

Eigen::MatrixXd ricci_from_tensor(const std::vector<double>& lowered, const Eigen::MatrixXd& metric);
Eigen::MatrixXd ricci_riemannian(const HomogeneousModel& M);

struct EinsteinResult {
  bool is_einstein = false;
  double lambda = 0.0;
  double residual = 0.0;
};
EinsteinResult einstein_check(const Eigen::MatrixXd& ric, double eps = 1e-8);

CheckResult parallelism_check(const HomogeneousModel& M, const Multivector& T, const Tolerance& tol = {});
CheckResult parallelism_check(const HomogeneousModel& M, const CurvatureOperator& R, const Tolerance& tol = {});

struct NotInvariant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
Multivector invariant_d(const HomogeneousModel& M, const Multivector& a, const Tolerance& tol = {});

// Orthonormal basis (2-form coordinates as columns) of the 2-forms annihilated by all
// Lambda(X) and by ad(h).
Eigen::MatrixXd parallel_two_forms(const HomogeneousModel& M, const Tolerance& tol = {});

// Nomizu model as a homogeneous model with h first and Lambda = 0.
HomogeneousModel model_from_nomizu(const NomizuData& d, const Tolerance& tol = {});
// Infinitesimal model of a homogeneous model with orthonormal m basis: h is the
// Lie closure of the curvature image.
NomizuData nomizu_from_model(const Multivector& T, const CurvatureOperator& R, const Tolerance& tol = {});

}  // namespace nred
