#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nred/curvature.hpp"
#include "nred/homogeneous.hpp"
#include "nred/multivector.hpp"
#include "nred/nomizu.hpp"
#include "nred/tolerance.hpp"

namespace nred {

using Params = std::map<std::string, double>;

struct ConstraintViolation : std::invalid_argument {
  explicit ConstraintViolation(const std::string& eq)
      : std::invalid_argument("constraint violated: " + eq), equation(eq) {}
  std::string equation;
};

struct UnknownEntry : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Expected {
  std::map<std::string, Multivector> forms;
  std::map<std::string, CurvatureOperator> curvatures;
  std::map<std::string, Eigen::MatrixXd> matrices;
  std::map<std::string, double> scalars;
  std::map<std::string, bool> flags;
  std::map<std::string, std::string> labels;
};

struct CatalogModel {
  std::string entry;
  Params params;  // including dependent parameters
  Multivector T;
  CurvatureOperator R;
  std::optional<NomizuData> nomizu;
  std::optional<HomogeneousModel> model;
  // Columns in the coordinates of build_lie_algebra(*nomizu) spanning the transversal
  // subalgebra discussed for the family.
  std::optional<Eigen::MatrixXd> g1_candidate;
  Expected expected;
  std::vector<std::string> notes;
};

struct ParamSpec {
  std::string name;
  double default_value;
  std::string description;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::vector<ParamSpec> params;
  std::function<CatalogModel(const Params&, const Tolerance&)> build;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_entry(const std::string& name);
// Unspecified parameters take their defaults; unknown names throw std::invalid_argument.
CatalogModel build_entry(const std::string& name, const Params& overrides, const Tolerance& tol = {});

CatalogModel dim3_model(double lambda, double alpha, const Tolerance& tol = {});
CatalogModel dim5_B1_model(double rho, double lambda, double a, double c, const Tolerance& tol = {});
CatalogModel dim5_B2_model(double rho, double a, const Tolerance& tol = {});
CatalogModel dim6_caseB_model(double alpha, double beta, double a, double c, const Tolerance& tol = {});
CatalogModel dim6_D2_model(double alpha, double alpha_prime, double beta, const Tolerance& tol = {});
CatalogModel stiefel_model(double r, double a, double b, const Tolerance& tol = {});
CatalogModel berger_model(double gamma, const Tolerance& tol = {});
CatalogModel heisenberg_model(const std::vector<double>& lambdas, const Tolerance& tol = {});
CatalogModel s3s3_model(double a, double b, double c, double d, double lambda, const Tolerance& tol = {});
CatalogModel sl2c_model(double alpha, double lambda, const Tolerance& tol = {});
// Parameters in the order a, b, c, d, f, h, s, t, u, v, w, x.
CatalogModel rank4_example_form(const std::vector<double>& p, const Tolerance& tol = {});

struct S3S3Coefficients {
  double mu, nu, gamma, delta, sigma, tau, xi, eta, theta;
  double Sigma;
  double Delta;
};
S3S3Coefficients s3s3_coefficients(double a, double b, double c, double d, double lambda);

// D.2 Killing form in the basis (Omega_1, Omega_3, Omega_5, e_2, e_4, e_6).
Eigen::MatrixXd d2_killing_expected(double alpha, double alpha_prime, double beta);
double d2_killing_det_expected(double alpha, double alpha_prime, double beta);

// Name of the 3-dimensional algebra [x,y] = z, [z,x] = k y, [y,z] = k x.
std::string three_dim_name(double k, double eps);

}  // namespace nred
