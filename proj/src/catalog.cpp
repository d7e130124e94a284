#include "nred/catalog.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "nred/lie_algebra.hpp"
#include "nred/skew.hpp"
#include "nred/torsion.hpp"

namespace nred {

namespace {

using cd = std::complex<double>;
const cd I1(0.0, 1.0);

Multivector e(int n, std::initializer_list<int> idx, double c = 1.0) { return Multivector::basis(n, idx, c); }

Eigen::VectorXd unit(int n, int k) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v(k) = 1.0;
  return v;
}

Eigen::MatrixXd so3(int i, int j) { return elementary(3, i, j); }

Eigen::MatrixXcd blockdiag(const std::vector<Eigen::MatrixXcd>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.rows());
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    M.block(off, off, b.rows(), b.cols()) = b;
    off += static_cast<int>(b.rows());
  }
  return M;
}

// su(2) basis Y1, Y3, Y5.
Eigen::Matrix2cd Y(int i) {
  Eigen::Matrix2cd m;
  if (i == 1) m << I1, 0, 0, -I1;
  else if (i == 3) m << 0, -1, 1, 0;
  else m << 0, I1, I1, 0;
  return m;
}

void require(bool ok, const std::string& eq) {
  if (!ok) throw ConstraintViolation(eq);
}

void finish_nomizu(CatalogModel& cm, NomizuData d, const Tolerance& tol) {
  cm.T = d.T;
  cm.R = d.R;
  cm.model = model_from_nomizu(d, tol);
  cm.nomizu = std::move(d);
}

void finish_homogeneous(CatalogModel& cm, HomogeneousModel M, const Tolerance& tol) {
  cm.T = invariant_torsion(M).T;
  cm.R = invariant_curvature(M).R;
  cm.nomizu = nomizu_from_model(cm.T, cm.R, tol);
  cm.model = std::move(M);
}

std::string d5_case(double x, double y, double eps) {
  return std::abs(std::abs(x) - std::abs(y)) <= eps * std::max(1.0, std::abs(x) + std::abs(y)) ? "D5_B2" : "D5_B1";
}

// Nomizu coordinates: h first (k elements), then e_1..e_n.
Eigen::VectorXd nomizu_vec(const CatalogModel& cm, int i) {
  const int k = static_cast<int>(cm.nomizu->h.size());
  return unit(k + cm.nomizu->dim_V, k + i - 1);
}

}  // namespace

std::string three_dim_name(double k, double eps) {
  if (std::abs(k) <= eps) return "heis3";
  return k > 0 ? "su(2)" : "sl(2,R)";
}

CatalogModel dim3_model(double lambda, double alpha, const Tolerance& tol) {
  require(lambda != 0.0, "lambda != 0");
  CatalogModel cm;
  cm.entry = "dim3";
  cm.params = {{"lambda", lambda}, {"alpha", alpha}};
  NomizuData d;
  d.dim_V = 3;
  d.h = {elementary(3, 1, 2)};
  d.h_labels = {"E12"};
  d.T = e(3, {1, 2, 3}, lambda);
  d.R = alpha * CurvatureOperator::sym(e(3, {1, 2}), e(3, {1, 2}));
  finish_nomizu(cm, std::move(d), tol);

  LieAlgebraData L = build_lie_algebra(*cm.nomizu, tol);
  Eigen::MatrixXd cand(L.dim(), 3);
  cand.col(0) = nomizu_vec(cm, 1);
  cand.col(1) = nomizu_vec(cm, 2);
  cand.col(2) = L.bracket(cand.col(0), cand.col(1));
  cm.g1_candidate = cand;

  cm.expected.forms["T"] = cm.T;
  cm.expected.forms["sigma_T"] = Multivector(3);
  cm.expected.labels["case"] = "D3";
  cm.expected.labels["g1"] = three_dim_name(lambda * lambda - alpha, tol.eps_coeff);
  cm.expected.scalars["g1_constant"] = lambda * lambda - alpha;
  return cm;
}

CatalogModel dim5_B1_model(double rho, double lambda, double a, double c, const Tolerance& tol) {
  require(rho * lambda != 0.0, "rho*lambda != 0");
  require(rho != lambda, "rho != lambda");
  const double b = 2.0 * lambda * rho;
  CatalogModel cm;
  cm.entry = "b1";
  cm.params = {{"rho", rho}, {"lambda", lambda}, {"a", a}, {"c", c}, {"b", b}};
  const Multivector O1 = e(5, {1, 2}), O2 = e(5, {3, 4});
  NomizuData d;
  d.dim_V = 5;
  d.h = {two_form_to_endo(O1), two_form_to_endo(O2)};
  d.h_labels = {"Omega1", "Omega2"};
  d.T = -(e(5, {1, 2, 5}, rho) + e(5, {3, 4, 5}, lambda));
  d.R = a * CurvatureOperator::sym(O1, O1) + b * CurvatureOperator::sym(O1, O2) + c * CurvatureOperator::sym(O2, O2);
  finish_nomizu(cm, std::move(d), tol);

  LieAlgebraData L = build_lie_algebra(*cm.nomizu, tol);
  Eigen::MatrixXd cand(L.dim(), 6);
  for (int i = 1; i <= 4; ++i) cand.col(i - 1) = nomizu_vec(cm, i);
  cand.col(4) = L.bracket(cand.col(0), cand.col(1));
  cand.col(5) = L.bracket(cand.col(2), cand.col(3));
  cm.g1_candidate = cand;

  cm.expected.forms["T"] = cm.T;
  cm.expected.forms["sigma_T"] = e(5, {1, 2, 3, 4}, rho * lambda);
  Eigen::VectorXd ric(5);
  ric << -a, -a, -c, -c, 0.0;
  cm.expected.matrices["ricci"] = ric.asDiagonal();
  cm.expected.labels["case"] = d5_case(rho, lambda, tol.eps_rank);
  const double k1 = rho * rho - a, k2 = lambda * lambda - c;
  const bool heis = std::abs(k1) <= tol.eps_coeff && std::abs(k2) <= tol.eps_coeff;
  cm.expected.labels["g1"] = heis ? "heis5" : "";
  if (!heis) {
    std::string n1 = three_dim_name(k1, tol.eps_coeff), n2 = three_dim_name(k2, tol.eps_coeff);
    cm.expected.labels["g1_ideals"] = std::min(n1, n2) + "," + std::max(n1, n2);
  }
  cm.expected.flags["ricci_flat"] = a == 0.0 && c == 0.0;
  return cm;
}

CatalogModel dim5_B2_model(double rho, double a, const Tolerance& tol) {
  require(rho != 0.0, "rho != 0");
  const double b = 3.0 * a + rho * rho;
  CatalogModel cm;
  cm.entry = "b2";
  cm.params = {{"rho", rho}, {"a", a}, {"b", b}};
  const Multivector x1 = e(5, {1, 3}) + e(5, {2, 4}), x2 = e(5, {1, 4}) - e(5, {2, 3}),
                    x3 = e(5, {1, 2}) - e(5, {3, 4}), x4 = e(5, {1, 2}) + e(5, {3, 4});
  NomizuData d;
  d.dim_V = 5;
  d.h = {two_form_to_endo(x1), two_form_to_endo(x2), two_form_to_endo(x3), two_form_to_endo(x4)};
  d.h_labels = {"e13+e24", "e14-e23", "e12-e34", "e12+e34"};
  d.T = -rho * (e(5, {1, 2, 5}) + e(5, {3, 4, 5}));
  d.R = a * (CurvatureOperator::sym(x1, x1) + CurvatureOperator::sym(x2, x2) + CurvatureOperator::sym(x3, x3)) +
        b * CurvatureOperator::sym(x4, x4);
  finish_nomizu(cm, std::move(d), tol);
  cm.expected.forms["T"] = cm.T;
  cm.expected.forms["sigma_T"] = e(5, {1, 2, 3, 4}, rho * rho);
  cm.expected.labels["case"] = "D5_B2";
  cm.expected.labels["h"] = "u(2)";
  return cm;
}

CatalogModel dim6_caseB_model(double alpha, double beta, double a, double c, const Tolerance& tol) {
  require(alpha * beta != 0.0, "alpha*beta != 0");
  const double b = a - alpha * alpha + beta * beta;
  CatalogModel cm;
  cm.entry = "dim6_b";
  cm.params = {{"alpha", alpha}, {"beta", beta}, {"a", a}, {"c", c}, {"b", b}};
  const Multivector u1 = e(6, {1, 2}) + e(6, {3, 4}), u2 = e(6, {1, 2}) - e(6, {3, 4});
  NomizuData d;
  d.dim_V = 6;
  d.h = {elementary(6, 1, 2), elementary(6, 3, 4)};
  d.h_labels = {"E12", "E34"};
  d.T = alpha * wedge(u1, e(6, {5})) + beta * wedge(u2, e(6, {6}));
  d.R = a * CurvatureOperator::sym(u1, u1) + (2.0 * c) * CurvatureOperator::sym(u1, u2) +
        b * CurvatureOperator::sym(u2, u2);
  finish_nomizu(cm, std::move(d), tol);

  LieAlgebraData L = build_lie_algebra(*cm.nomizu, tol);
  Eigen::MatrixXd cand(L.dim(), 6);
  for (int i = 1; i <= 4; ++i) cand.col(i - 1) = nomizu_vec(cm, i);
  cand.col(4) = L.bracket(cand.col(0), cand.col(1));
  cand.col(5) = L.bracket(cand.col(2), cand.col(3));
  cm.g1_candidate = cand;

  cm.expected.forms["T"] = cm.T;
  cm.expected.forms["sigma_T"] = e(6, {1, 2, 3, 4}, alpha * alpha - beta * beta);
  cm.expected.labels["case"] = std::abs(alpha * alpha - beta * beta) > tol.eps_coeff ? "D6_B" : "D6_A";
  const double kp = a + b + 2.0 * c - alpha * alpha - beta * beta;
  const double km = a + b - 2.0 * c - alpha * alpha - beta * beta;
  std::string n1 = three_dim_name(-kp, tol.eps_coeff), n2 = three_dim_name(-km, tol.eps_coeff);
  cm.expected.labels["g1_ideals"] = std::min(n1, n2) + "," + std::max(n1, n2);
  cm.expected.scalars["k_plus"] = kp;
  cm.expected.scalars["k_minus"] = km;
  cm.expected.flags["flat"] = a == 0.0 && b == 0.0 && c == 0.0;
  return cm;
}

Eigen::MatrixXd d2_killing_expected(double alpha, double alpha_prime, double beta) {
  const double g = alpha - 2.0 * beta;
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(6, 6);
  for (int i = 0; i < 3; ++i) {
    K(i, i) = -4.0 * g * g;
    K(i, i + 3) = K(i + 3, i) = 2.0 * alpha_prime * g;
    K(i + 3, i + 3) = 4.0 * beta * g - 2.0 * alpha_prime * alpha_prime;
  }
  return K;
}

double d2_killing_det_expected(double alpha, double alpha_prime, double beta) {
  const double g = alpha - 2.0 * beta;
  return -64.0 * std::pow(g, 6) * std::pow(4.0 * beta * g - alpha_prime * alpha_prime, 3);
}

CatalogModel dim6_D2_model(double alpha, double alpha_prime, double beta, const Tolerance& tol) {
  require(beta != 0.0, "beta != 0");
  require(alpha != beta, "alpha != beta");
  CatalogModel cm;
  cm.entry = "d2";
  cm.params = {{"alpha", alpha}, {"alpha_prime", alpha_prime}, {"beta", beta}};
  const Multivector A1 = e(6, {3, 5}) + e(6, {4, 6}), A3 = e(6, {1, 5}) + e(6, {2, 6}),
                    A5 = e(6, {1, 3}) + e(6, {2, 4});
  NomizuData d;
  d.dim_V = 6;
  d.h = {-2.0 * two_form_to_endo(A1), 2.0 * two_form_to_endo(A3), -2.0 * two_form_to_endo(A5)};
  d.h_labels = {"H1", "H3", "H5"};
  d.T = e(6, {1, 3, 5}, alpha) + e(6, {2, 4, 6}, alpha_prime) +
        beta * (e(6, {2, 4, 5}) + e(6, {2, 3, 6}) + e(6, {1, 4, 6}));
  d.R = (beta * (alpha - beta)) *
        (CurvatureOperator::sym(A1, A1) + CurvatureOperator::sym(A3, A3) + CurvatureOperator::sym(A5, A5));
  finish_nomizu(cm, std::move(d), tol);

  // Omega_i = e_i + (beta - alpha)/2 H_i for i = 1, 3, 5, then e_2, e_4, e_6.
  const int n = 9;
  Eigen::MatrixXd cand = Eigen::MatrixXd::Zero(n, 6);
  for (int k = 0; k < 3; ++k) {
    cand(3 + 2 * k, k) = 1.0;
    cand(k, k) = 0.5 * (beta - alpha);
    cand(3 + 2 * k + 1, 3 + k) = 1.0;
  }
  cm.g1_candidate = cand;

  cm.expected.forms["T"] = cm.T;
  cm.expected.forms["sigma_T"] =
      (beta * (beta - alpha)) * (e(6, {1, 2, 5, 6}) + e(6, {1, 2, 3, 4}) + e(6, {3, 4, 5, 6}));
  cm.expected.curvatures["R"] = cm.R;
  cm.expected.matrices["ricci"] = -2.0 * beta * (alpha - beta) * Eigen::MatrixXd::Identity(6, 6);
  cm.expected.matrices["killing"] = d2_killing_expected(alpha, alpha_prime, beta);
  cm.expected.scalars["killing_det"] = d2_killing_det_expected(alpha, alpha_prime, beta);
  cm.expected.labels["case"] = "D6_D";

  const double g = alpha - 2.0 * beta;
  const double q = 4.0 * beta * g - alpha_prime * alpha_prime;
  const double eps = tol.eps_coeff;
  std::string name;
  if (std::abs(g) <= eps) name = std::abs(alpha_prime) <= eps ? "n6(0,0,0,12,13,23)" : "R^3 x su(2)";
  else if (std::abs(q) <= eps) name = "R^3 x| su(2)";
  else name = q < 0 ? "su(2)+su(2)" : "sl(2,C)";
  cm.expected.labels["g1"] = name;
  cm.expected.flags["pure_w1"] = std::abs(alpha_prime) <= eps && std::abs(alpha + beta) <= eps;
  cm.expected.flags["pure_w3"] = std::abs(alpha_prime) <= eps && std::abs(alpha - 3.0 * beta) <= eps;
  cm.expected.flags["nearly_kahler"] = cm.expected.flags["pure_w1"];
  return cm;
}

CatalogModel stiefel_model(double r, double a, double b, const Tolerance& tol) {
  require(a > 0.0, "a > 0");
  require(b > 0.0, "b > 0");
  CatalogModel cm;
  cm.entry = "stiefel";
  cm.params = {{"r", r}, {"a", a}, {"b", b}};
  const double s = std::sqrt(r * r + 1.0);
  auto pair = [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    return blockdiag({x.cast<cd>(), y.cast<cd>()});
  };
  const Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(3, 3);
  std::vector<Eigen::MatrixXcd> basis = {
      pair(so3(1, 2), r * so3(1, 2)),
      pair(std::sqrt(a) * so3(1, 3), Z),
      pair(std::sqrt(a) * so3(2, 3), Z),
      pair(Z, std::sqrt(b) * so3(1, 3)),
      pair(Z, std::sqrt(b) * so3(2, 3)),
      pair(-r / s * so3(1, 2), so3(1, 2) / s),
  };
  LieAlgebraData L = algebra_from_matrices(basis, {"h", "u1", "u2", "v1", "v2", "xi"});
  std::vector<Eigen::MatrixXd> lam(5, Eigen::MatrixXd::Zero(5, 5));
  lam[4] = r * (a - 1.0) / s * elementary(5, 1, 2) + (1.0 - b) / s * elementary(5, 3, 4);
  finish_homogeneous(cm, make_model(std::move(L), {0}, {1, 2, 3, 4, 5}, Eigen::MatrixXd::Identity(5, 5), lam), tol);

  const Multivector a12 = e(5, {1, 2}), b12 = e(5, {3, 4});
  const double r2 = r * r + 1.0;
  cm.expected.forms["T"] = e(5, {1, 2, 5}, a * r / s) - e(5, {3, 4, 5}, b / s);
  cm.expected.forms["d_eta"] = (a * r / s) * a12 - (b / s) * b12;
  cm.expected.curvatures["R"] = ((a * (a - 1.0) * r * r - a) / r2) * CurvatureOperator::sym(a12, a12) +
                                ((b * (b - 1.0) - b * r * r) / r2) * CurvatureOperator::sym(b12, b12) +
                                (-a * b * r / r2) * CurvatureOperator::sym_full(a12, b12);
  Eigen::VectorXd ricg(5);
  ricg << a - a * a * r * r / (2 * r2), a - a * a * r * r / (2 * r2), b - b * b / (2 * r2), b - b * b / (2 * r2),
      a * a * r * r / (2 * r2) + b * b / (2 * r2);
  cm.expected.matrices["ricci_g"] = ricg.asDiagonal();
  cm.expected.matrices["lambda_g_u1"] = -(a * r / (2 * s)) * elementary(5, 2, 5);
  cm.expected.matrices["lambda_g_xi"] =
      (r * (a - 2.0) / (2 * s)) * elementary(5, 1, 2) + ((2.0 - b) / (2 * s)) * elementary(5, 3, 4);
  cm.expected.scalars["lambda_param"] = r * a / s;
  cm.expected.scalars["rho_param"] = -b / s;
  const double t = 2.0 - 3.0 * b / (2.0 * r2);
  cm.expected.scalars["einstein_residual"] =
      std::max(std::abs(a - b * t), std::abs(r * r * b * t * t - 2.0 * r2 + 2.0 * b));
  cm.expected.flags["einstein_g"] = cm.expected.scalars["einstein_residual"] <= 1e-8;
  cm.expected.flags["naturally_reductive_literal"] = std::abs(a - 1.0) <= tol.eps_coeff && std::abs(b - 1.0) <= tol.eps_coeff;
  cm.expected.flags["quasi_sasaki"] = true;
  cm.expected.flags["alpha_sasaki"] = std::abs(a * r + b) <= tol.eps_coeff;
  cm.expected.labels["case"] = d5_case(a * r / s, b / s, tol.eps_rank);
  cm.notes.push_back("SO(2)_r is closed only for rational r; r is used as given");
  return cm;
}

CatalogModel berger_model(double gamma, const Tolerance& tol) {
  require(gamma > 0.0, "gamma > 0");
  CatalogModel cm;
  cm.entry = "berger";
  cm.params = {{"gamma", gamma}};
  auto lower = [](const Eigen::Matrix2cd& B) {
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    m.block(1, 1, 2, 2) = B;
    return Eigen::MatrixXcd(m);
  };
  auto m0 = [](cd v1, cd v2) {
    Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
    m(1, 0) = v1;
    m(2, 0) = v2;
    m(0, 1) = -std::conj(v1);
    m(0, 2) = -std::conj(v2);
    return Eigen::MatrixXcd(m);
  };
  Eigen::Matrix3cd eta = Eigen::Matrix3cd::Zero();
  eta(0, 0) = -2.0 * I1;
  eta(1, 1) = I1;
  eta(2, 2) = I1;
  eta /= std::sqrt(3.0);
  std::vector<Eigen::MatrixXcd> basis = {lower(Y(1)), lower(Y(3)), lower(Y(5)), m0(1, 0), m0(I1, 0), m0(0, 1),
                                         m0(0, I1), Eigen::MatrixXcd(-std::sqrt(gamma) * eta)};
  LieAlgebraData L = algebra_from_matrices(basis, {"h1", "h2", "h3", "e1", "e2", "e3", "e4", "e5"});
  std::vector<Eigen::MatrixXd> lam(5, Eigen::MatrixXd::Zero(5, 5));
  lam[4] = (std::sqrt(3.0 / gamma) - std::sqrt(3.0 * gamma)) * (elementary(5, 1, 2) + elementary(5, 3, 4));
  finish_homogeneous(cm, make_model(std::move(L), {0, 1, 2}, {3, 4, 5, 6, 7}, Eigen::MatrixXd::Identity(5, 5), lam),
                     tol);

  const Multivector x1 = e(5, {1, 3}) + e(5, {2, 4}), x2 = e(5, {1, 4}) - e(5, {2, 3}),
                    x3 = e(5, {1, 2}) - e(5, {3, 4}), x4 = e(5, {1, 2}) + e(5, {3, 4});
  cm.expected.forms["T"] = std::sqrt(3.0 / gamma) * wedge(x4, e(5, {5}));
  cm.expected.curvatures["R"] =
      (3.0 / gamma - 3.0) * CurvatureOperator::sym(x4, x4) +
      (-1.0) * (CurvatureOperator::sym(x1, x1) + CurvatureOperator::sym(x2, x2) + CurvatureOperator::sym(x3, x3));
  cm.expected.scalars["a"] = -1.0;
  cm.expected.scalars["b"] = 3.0 / gamma - 3.0;
  cm.expected.scalars["rho_squared"] = 3.0 / gamma;
  cm.expected.flags["ricci_flat"] = std::abs(gamma - 0.5) <= tol.eps_coeff;
  cm.expected.flags["einstein_g"] = std::abs(gamma - 0.75) <= tol.eps_coeff;
  cm.expected.labels["case"] = "D5_B2";
  cm.notes.push_back("Reeb vector e5 = -sqrt(gamma) eta; with +sqrt(gamma) eta the printed Lambda(e5) gives "
                     "non-skew torsion");
  cm.notes.push_back("T = sqrt(3/gamma)(e12+e34)^e5; the doubled '+' of the printed formula read as a single '+'");
  return cm;
}

CatalogModel heisenberg_model(const std::vector<double>& lambdas, const Tolerance& tol) {
  const int n = static_cast<int>(lambdas.size());
  require(n >= 1 && n <= 2, "1 <= n <= 2");
  for (double l : lambdas) require(l > 0.0, "lambda_i > 0");
  const int dim = 2 * n + 1;
  CatalogModel cm;
  cm.entry = "heisenberg";
  cm.params["n"] = n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    cm.params["lambda" + std::to_string(i + 1)] = lambdas[i];
    labels.push_back("u" + std::to_string(i + 1));
    labels.push_back("v" + std::to_string(i + 1));
  }
  labels.push_back("xi");
  LieAlgebraData L(dim, labels);
  for (int i = 0; i < n; ++i) L.set_bracket(2 * i, 2 * i + 1, dim - 1, lambdas[i]);

  Multivector T(dim), w(dim);
  for (int i = 0; i < n; ++i) {
    T -= e(dim, {2 * i + 1, 2 * i + 2, dim}, lambdas[i]);
    w += e(dim, {2 * i + 1, 2 * i + 2}, lambdas[i]);
  }
  std::vector<int> m_idx;
  for (int i = 0; i < dim; ++i) m_idx.push_back(i);
  HomogeneousModel M = make_model(L, {}, m_idx, Eigen::MatrixXd::Identity(dim, dim));
  M.lambda = characteristic_connection(M, T);
  finish_homogeneous(cm, std::move(M), tol);

  cm.expected.forms["T"] = T;
  cm.expected.forms["d_eta"] = -1.0 * w;
  cm.expected.curvatures["R"] = CurvatureOperator::sym(w, w);
  // Lambda^g(X) = sum omega_ij(X) E_ij with omega_{u v} = -l/2 eta, omega_{u xi} = -l/2 beta,
  // omega_{v xi} = l/2 alpha.
  for (int i = 0; i < n; ++i) {
    const double l = lambdas[i];
    cm.expected.matrices["lambda_g_u" + std::to_string(i + 1)] = (l / 2.0) * elementary(dim, 2 * i + 2, dim);
    cm.expected.matrices["lambda_g_v" + std::to_string(i + 1)] = -(l / 2.0) * elementary(dim, 2 * i + 1, dim);
  }
  Eigen::MatrixXd lx = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < n; ++i) lx += -(lambdas[i] / 2.0) * elementary(dim, 2 * i + 1, 2 * i + 2);
  cm.expected.matrices["lambda_g_xi"] = lx;
  bool equal = true, two = true;
  for (double l : lambdas) {
    equal = equal && std::abs(l - lambdas[0]) <= tol.eps_coeff;
    two = two && std::abs(l - 2.0) <= tol.eps_coeff;
  }
  cm.expected.flags["quasi_sasaki"] = true;
  cm.expected.flags["alpha_sasaki"] = equal;
  cm.expected.flags["sasaki"] = two;
  if (n == 1) cm.expected.labels["case"] = "D3";
  else cm.expected.labels["case"] = d5_case(lambdas[0], lambdas[1], tol.eps_rank);
  cm.expected.labels["algebra"] = n == 1 ? "heis3" : "heis5";
  if (n == 1) cm.expected.scalars["dim3_alpha"] = lambdas[0] * lambdas[0];
  return cm;
}

S3S3Coefficients s3s3_coefficients(double a, double b, double c, double d, double lambda) {
  S3S3Coefficients k{};
  const double D = (a - 1) * (d - 1) - (b - 1) * (c - 1);
  k.Delta = D;
  const double f = 2.0 / D;
  k.mu = -f * ((a * a - 1) * (d - 1) - (b * b - 1) * (c - 1));
  k.nu = -f * (b - 1) * (a - 1) * (b - a);
  k.gamma = -f * (a * (d - b * b) + a * a * (b - d) + (b * b - b) * c);
  k.delta = -f * (c * (a * (d - 1) - b * d + 1) + (b - 1) * d);
  k.sigma = f * ((a - 1) * (1 - b * d) + (a * c - 1) * (b - 1));
  k.tau = f * (a * c * (d - b) + c * b * (1 - d) + a * d * (b - 1));
  k.xi = -f * (c - 1) * (d - 1) * (c - d);
  k.eta = -f * ((d * d - 1) * (a - 1) - (c * c - 1) * (b - 1));
  k.theta = -f * (d * d * (c - a) + c * c * (b - d) + (d * a - c * b));
  const double l = lambda;
  k.Sigma = k.nu * k.nu / (l * l) + std::pow(l, 4) * k.xi * k.xi - l * l * k.xi * (2 * k.sigma - k.mu) -
            k.nu * (2 * k.delta - k.eta);
  return k;
}

CatalogModel s3s3_model(double a, double b, double c, double d, double lambda, const Tolerance& tol) {
  const double D = (a - 1) * (d - 1) - (b - 1) * (c - 1);
  require(D != 0.0, "Delta = (a-1)(d-1) - (b-1)(c-1) != 0");
  require(lambda > 0.0, "lambda > 0");
  CatalogModel cm;
  cm.entry = "s3s3";
  cm.params = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"lambda", lambda}};
  auto triple = [](const Eigen::Matrix2cd& y, cd p, cd q, cd s) {
    return blockdiag({Eigen::MatrixXcd(p * y), Eigen::MatrixXcd(q * y), Eigen::MatrixXcd(s * y)});
  };
  std::vector<Eigen::MatrixXcd> basis;
  for (int i : {1, 3, 5}) basis.push_back(triple(Y(i), 1, 1, 1));
  for (int i : {1, 3, 5}) {
    basis.push_back(triple(Y(i), 1, a, b));
    basis.push_back(triple(Y(i), lambda, lambda * c, lambda * d));
  }
  LieAlgebraData L = algebra_from_matrices(basis, {"h1", "h3", "h5", "e1", "e2", "e3", "e4", "e5", "e6"});
  const S3S3Coefficients k = s3s3_coefficients(a, b, c, d, lambda);
  const Multivector A1 = e(6, {3, 5}) + e(6, {4, 6}), A3 = e(6, {1, 5}) + e(6, {2, 6}),
                    A5 = e(6, {1, 3}) + e(6, {2, 4});
  const std::vector<Eigen::MatrixXd> sA = {two_form_to_endo(A1), -two_form_to_endo(A3), two_form_to_endo(A5)};
  std::vector<Eigen::MatrixXd> lam(6);
  for (int j = 0; j < 3; ++j) {
    lam[2 * j] = (-lambda * lambda * k.xi + k.sigma) * sA[j];
    lam[2 * j + 1] = (-k.nu / lambda + lambda * k.delta) * sA[j];
  }
  finish_homogeneous(cm, make_model(std::move(L), {0, 1, 2}, {3, 4, 5, 6, 7, 8}, Eigen::MatrixXd::Identity(6, 6), lam),
                     tol);

  const double l = lambda;
  cm.expected.forms["T"] = e(6, {1, 3, 5}, -2 * l * l * k.xi + 2 * k.sigma - k.mu) +
                           e(6, {2, 4, 6}, -2 * k.nu / l + l * (2 * k.delta - k.eta)) -
                           (l * l * k.xi) * (e(6, {1, 4, 6}) + e(6, {2, 3, 6}) + e(6, {2, 4, 5})) -
                           (k.nu / l) * (e(6, {1, 3, 6}) + e(6, {1, 4, 5}) + e(6, {2, 3, 5}));
  cm.expected.curvatures["R"] =
      k.Sigma * (CurvatureOperator::sym(A1, A1) + CurvatureOperator::sym(A3, A3) + CurvatureOperator::sym(A5, A5));
  cm.expected.forms["sigma_T"] = -k.Sigma * (e(6, {1, 2, 3, 4}) + e(6, {1, 2, 5, 6}) + e(6, {3, 4, 5, 6}));
  cm.expected.scalars["Sigma"] = k.Sigma;
  for (auto [name, v] : std::vector<std::pair<std::string, double>>{{"mu", k.mu},
                                                                    {"nu", k.nu},
                                                                    {"gamma", k.gamma},
                                                                    {"delta", k.delta},
                                                                    {"sigma", k.sigma},
                                                                    {"tau", k.tau},
                                                                    {"xi", k.xi},
                                                                    {"eta", k.eta},
                                                                    {"theta", k.theta}})
    cm.expected.scalars[name] = v;
  const double eps = tol.eps_coeff;
  const bool row = std::abs(b - 1.0) <= eps && std::abs(2 * c - d - 1.0) <= eps;
  cm.expected.flags["nearly_kahler"] =
      row && std::abs(lambda - 2 * std::abs(a - 1) / (std::sqrt(3.0) * std::abs(d - 1))) <= eps;
  cm.expected.flags["bi_invariant"] = row && std::abs(lambda - 2 * std::abs(a - 1) / std::abs(d - 1)) <= eps;
  cm.expected.flags["flat"] = std::abs(k.Sigma) <= eps;
  cm.expected.labels["case"] = std::abs(k.Sigma) <= eps ? "" : "D6_D";
  cm.notes.push_back("Lambda uses s_i A_i with s = (+,-,+), the signs of -1/2 ad h_i; the printed A_i give non-skew "
                     "torsion");
  cm.notes.push_back("R = Sigma[A1^2 + A3^2 + A5^2]; the printed A3^2 repetition read as A5^2");
  cm.notes.push_back("sigma_T = -Sigma(e1234+e1256+e3456) = +Sigma(*Omega) by recomputation");
  return cm;
}

CatalogModel sl2c_model(double alpha, double lambda, const Tolerance& tol) {
  require(alpha != 1.0, "alpha != 1");
  require(lambda > 0.0, "lambda > 0");
  CatalogModel cm;
  cm.entry = "sl2c";
  cm.params = {{"alpha", alpha}, {"lambda", lambda}};
  auto pair = [](const Eigen::Matrix2cd& x, const Eigen::Matrix2cd& y) {
    return blockdiag({Eigen::MatrixXcd(x), Eigen::MatrixXcd(y)});
  };
  const Eigen::Matrix2cd Z = Eigen::Matrix2cd::Zero();
  std::vector<Eigen::MatrixXcd> basis;
  for (int i : {1, 3, 5}) basis.push_back(pair(Y(i), Y(i)));
  for (int i : {1, 3, 5}) {
    basis.push_back(pair(lambda * alpha * Y(i), lambda * Y(i)));
    basis.push_back(pair(I1 * Y(i), Z));
  }
  LieAlgebraData L = algebra_from_matrices(basis, {"h1", "h3", "h5", "x1", "x2", "x3", "x4", "x5", "x6"});
  const Multivector A1 = e(6, {3, 5}) + e(6, {4, 6}), A3 = e(6, {1, 5}) + e(6, {2, 6}),
                    A5 = e(6, {1, 3}) + e(6, {2, 4});
  const std::vector<Eigen::MatrixXd> H = {-2.0 * two_form_to_endo(A1), 2.0 * two_form_to_endo(A3),
                                          -2.0 * two_form_to_endo(A5)};
  const double q = lambda * (1.0 - alpha);
  const double kappa = lambda * alpha - 1.0 / q;
  std::vector<Eigen::MatrixXd> lam(6, Eigen::MatrixXd::Zero(6, 6));
  for (int j = 0; j < 3; ++j) lam[2 * j] = kappa * H[j];
  finish_homogeneous(cm, make_model(std::move(L), {0, 1, 2}, {3, 4, 5, 6, 7, 8}, Eigen::MatrixXd::Identity(6, 6), lam),
                     tol);

  cm.expected.forms["T"] = e(6, {1, 3, 5}, 2 * q + 4 / q) + (2 / q) * (e(6, {1, 4, 6}) + e(6, {2, 3, 6}) + e(6, {2, 4, 5}));
  cm.expected.forms["N"] = (2 * (q - 1 / q)) * (e(6, {1, 3, 5}) - e(6, {1, 4, 6}) - e(6, {2, 3, 6}) - e(6, {2, 4, 5}));
  cm.expected.curvatures["R"] = (4 * (1 + 1 / (q * q))) * (CurvatureOperator::sym(A5, A5) +
                                                          CurvatureOperator::sym(A3, A3) + CurvatureOperator::sym(A1, A1));
  for (int j = 0; j < 3; ++j) cm.expected.matrices["H" + std::to_string(2 * j + 1)] = H[j];
  cm.expected.scalars["lambda_coefficient"] = kappa;
  cm.expected.flags["pure_w3"] = std::abs(q * q - 1.0) <= tol.eps_coeff;
  cm.expected.flags["pure_w1"] = false;
  cm.expected.flags["w4_vanishes"] = true;
  cm.expected.labels["case"] = "D6_D";
  cm.expected.labels["algebra"] = "sl(2,C)+su(2)";
  return cm;
}

CatalogModel rank4_example_form(const std::vector<double>& p, const Tolerance& tol) {
  if (p.size() != 12) throw std::invalid_argument("rank4 example needs 12 parameters");
  const double a = p[0], b = p[1], c = p[2], d = p[3], f = p[4], h = p[5];
  const double s = p[6], t = p[7], u = p[8], v = p[9], w = p[10], x = p[11];
  CatalogModel cm;
  cm.entry = "rank4";
  const char* names[] = {"a", "b", "c", "d", "f", "h", "s", "t", "u", "v", "w", "x"};
  for (int i = 0; i < 12; ++i) cm.params[names[i]] = p[i];
  auto block = [](double c12, double c13, double c14, double c23, double c24, double c34) {
    return e(6, {1, 2}, c12) + e(6, {1, 3}, c13) + e(6, {1, 4}, c14) + e(6, {2, 3}, c23) + e(6, {2, 4}, c24) +
           e(6, {3, 4}, c34);
  };
  cm.T = wedge(e(6, {5}), block(a, b, c, d, f, h)) + wedge(e(6, {6}), block(s, t, u, v, w, x));
  cm.R = CurvatureOperator(6);
  const double k = c * d - b * f + a * h + u * v - t * w + s * x;
  cm.expected.forms["T"] = cm.T;
  cm.expected.scalars["kernel_equation"] = k;
  cm.expected.flags["kernel_contains_e5_e6"] = std::abs(k) <= tol.eps_coeff;
  const std::vector<double> printed = {1, 1, 1, 1, -1, 1, 0.5, 1, 1, -1, 1, -2};
  bool is_printed = true;
  for (int i = 0; i < 12; ++i) is_printed = is_printed && std::abs(p[i] - printed[i]) <= tol.eps_coeff;
  if (is_printed) {
    cm.expected.scalars["star_sigma_rank"] = 4;
    cm.expected.labels["case"] = "D6_C_rank4";
  }
  cm.notes.push_back("e5, e6 lie in ker(*sigma_T) iff cd - bf + ah + uv - tw + sx = 0");
  return cm;
}

namespace {

double param(const Params& p, const std::string& k) { return p.at(k); }

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"dim3", "dim 3: T = lambda e123, R = alpha e12 (.) e12",
               {{"lambda", 1.0, "lambda != 0"}, {"alpha", 0.0, ""}},
               [](const Params& p, const Tolerance& t) { return dim3_model(param(p, "lambda"), param(p, "alpha"), t); }});
  c.push_back({"b1", "dim 5 case B.1, b = 2 lambda rho",
               {{"rho", 1.0, "rho*lambda != 0, rho != lambda"}, {"lambda", 2.0, ""}, {"a", 0.5, ""}, {"c", 0.3, ""}},
               [](const Params& p, const Tolerance& t) {
                 return dim5_B1_model(param(p, "rho"), param(p, "lambda"), param(p, "a"), param(p, "c"), t);
               }});
  c.push_back({"b2", "dim 5 case B.2, b = 3a + rho^2",
               {{"rho", 1.0, "rho != 0"}, {"a", -1.0, ""}},
               [](const Params& p, const Tolerance& t) { return dim5_B2_model(param(p, "rho"), param(p, "a"), t); }});
  c.push_back({"dim6_b", "dim 6 case B, b = a - alpha^2 + beta^2",
               {{"alpha", 1.0, "alpha*beta != 0"}, {"beta", 2.0, ""}, {"a", 1.0, ""}, {"c", 0.5, ""}},
               [](const Params& p, const Tolerance& t) {
                 return dim6_caseB_model(param(p, "alpha"), param(p, "beta"), param(p, "a"), param(p, "c"), t);
               }});
  c.push_back({"d2", "dim 6 case D.2",
               {{"alpha", -1.0, "alpha != beta"}, {"alpha_prime", 0.0, ""}, {"beta", 1.0, "beta != 0"}},
               [](const Params& p, const Tolerance& t) {
                 return dim6_D2_model(param(p, "alpha"), param(p, "alpha_prime"), param(p, "beta"), t);
               }});
  c.push_back({"stiefel", "SO(3)xSO(3)/SO(2)_r with metric g_{a,b}",
               {{"r", 1.0, "rational for closedness"}, {"a", 4.0 / 3.0, "a > 0"}, {"b", 4.0 / 3.0, "b > 0"}},
               [](const Params& p, const Tolerance& t) {
                 return stiefel_model(param(p, "r"), param(p, "a"), param(p, "b"), t);
               }});
  c.push_back({"berger", "SU(3)/SU(2) with metric g_gamma",
               {{"gamma", 0.5, "gamma > 0"}},
               [](const Params& p, const Tolerance& t) { return berger_model(param(p, "gamma"), t); }});
  c.push_back({"heisenberg", "Heisenberg group H^{2n+1}, n = 1 or 2",
               {{"n", 2.0, "1 <= n <= 2"}, {"lambda1", 1.0, "> 0"}, {"lambda2", 2.0, "> 0"}},
               [](const Params& p, const Tolerance& t) {
                 const double nd = param(p, "n");
                 require(nd == 1.0 || nd == 2.0, "1 <= n <= 2");
                 std::vector<double> l{param(p, "lambda1")};
                 if (nd == 2.0) l.push_back(param(p, "lambda2"));
                 return heisenberg_model(l, t);
               }});
  c.push_back({"s3s3", "SU(2)^3/SU(2) with parameters a, b, c, d, lambda",
               {{"a", 2.0, "Delta != 0"}, {"b", 1.0, ""}, {"c", 0.5, ""}, {"d", 3.0, ""}, {"lambda", 1.0, "> 0"}},
               [](const Params& p, const Tolerance& t) {
                 return s3s3_model(param(p, "a"), param(p, "b"), param(p, "c"), param(p, "d"), param(p, "lambda"), t);
               }});
  c.push_back({"sl2c", "SL(2,C) x SU(2)/SU(2)",
               {{"alpha", 0.5, "alpha != 1"}, {"lambda", 1.0, "lambda > 0"}},
               [](const Params& p, const Tolerance& t) { return sl2c_model(param(p, "alpha"), param(p, "lambda"), t); }});
  c.push_back({"rank4", "3-form family in dim 6 with rank(*sigma_T) = 4",
               {{"a", 1.0, ""}, {"b", 1.0, ""}, {"c", 1.0, ""}, {"d", 1.0, ""}, {"f", -1.0, ""}, {"h", 1.0, ""},
                {"s", 0.5, ""}, {"t", 1.0, ""}, {"u", 1.0, ""}, {"v", -1.0, ""}, {"w", 1.0, ""}, {"x", -2.0, ""}},
               [](const Params& p, const Tolerance& t) {
                 std::vector<double> v;
                 for (const char* k : {"a", "b", "c", "d", "f", "h", "s", "t", "u", "v", "w", "x"}) v.push_back(param(p, k));
                 return rank4_example_form(v, t);
               }});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = make_catalog();
  return c;
}

const CatalogEntry& find_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw UnknownEntry("unknown catalog entry: " + name);
}

CatalogModel build_entry(const std::string& name, const Params& overrides, const Tolerance& tol) {
  const CatalogEntry& entry = find_entry(name);
  Params p;
  for (const auto& s : entry.params) p[s.name] = s.default_value;
  for (const auto& [k, v] : overrides) {
    if (!p.count(k)) throw std::invalid_argument("unknown parameter '" + k + "' for " + name);
    p[k] = v;
  }
  return entry.build(p, tol);
}

}  // namespace nred
