#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nred/multivector.hpp"
#include "nred/skew.hpp"
#include "nred/tolerance.hpp"

namespace nred {

// 1/2 sum_i (e_i _| T) ^ (e_i _| T)
Multivector sigma_T(const Multivector& T);
// sigma(X,Y,Z,V) = cyclic_{X,Y,Z} g(T(X,Y), T(Z,V))
Multivector sigma_T_cyclic(const Multivector& T);
// T(e_x, e_y) as a vector (0-based indices).
Eigen::VectorXd torsion_vector(const Multivector& T, int x, int y);

Eigen::MatrixXd ker_T(const Multivector& T, const Tolerance& tol = {});

struct SkewNormalForm {
  std::vector<double> spectrum;  // floor(n/2) values, descending, >= 0
  int rank = 0;
  // Orthonormal columns f_1..f_n with A f_{2k-1} = rho_k f_{2k}, kernel last.
  Eigen::MatrixXd frame;
};
SkewNormalForm skew_normal_form(const Multivector& w, const Tolerance& tol = {});

enum class CaseLabel { D3, D4, D5_A, D5_B1, D5_B2, D6_A, D6_B, D6_C_rank4, D6_D };
std::string to_string(CaseLabel c);

struct ClassificationReport {
  int dim = 0;
  CaseLabel case_label = CaseLabel::D3;
  Multivector sigma_T;
  std::string spectrum_source;  // "*T" (dim 5), "*sigma_T" (dim 6), "" otherwise
  int star_sigma_rank = 0;
  std::vector<double> skew_spectrum;
  int ker_T_dim = 0;
  int iso_T_dim = 0;
  int g_T_dim = 0;
  std::map<std::string, double> parameters;
  std::map<std::string, bool> flags;
  Eigen::MatrixXd adapted_frame;
  std::optional<Eigen::VectorXd> distinguished_vector;  // *T in dim 4, xi in dim 5
  std::vector<std::string> advisories;
};

struct UnsupportedDimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

ClassificationReport classify(const Multivector& T, const Tolerance& tol = {});

struct ContactData {
  Eigen::VectorXd xi;
  Multivector eta;
  Multivector d_eta;
  Multivector F;
  Eigen::MatrixXd phi;
  Eigen::MatrixXd frame;  // adapted frame of d_eta, xi last
  std::vector<double> values;  // skew spectrum of d_eta
  double rho = 0.0, lambda = 0.0;
  bool quasi_sasaki = true, alpha_sasaki = false, sasaki = false;
  double phi_square_residual = 0.0;
  double metric_residual = 0.0;
  double torsion_residual = 0.0;  // |T - eta ^ d eta|
};

// Odd dimension, given unit Reeb vector xi.
ContactData contact_structure(const Multivector& T, const Eigen::VectorXd& xi, const Tolerance& tol = {});
// dim 5 with xi = *sigma_T / |sigma_T|.
ContactData contact_structure_dim5(const Multivector& T, const Tolerance& tol = {});

struct HermitianData {
  Eigen::MatrixXd J;
  Multivector Omega;        // endo_to_two_form(J)
  Eigen::MatrixXd frame;    // adapted frame, J f_{2k-1} = f_{2k}
  Multivector w1_part;      // all parts in the original frame
  Multivector w3_part;
  Multivector w4_part;
  Eigen::VectorXd lee_form; // theta_k = 1/2 sum_ij Omega_ij T_ijk
  double j_square_residual = 0.0;
  bool pure_w1 = false, pure_w3 = false, w4_vanishes = false;
};

HermitianData hermitian_from_sigma(const Multivector& T, const Tolerance& tol = {});

}  // namespace nred
