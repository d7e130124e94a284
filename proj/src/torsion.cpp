#include "nred/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nred/linalg.hpp"

namespace nred {

Multivector sigma_T(const Multivector& T) {
  const int n = T.dim();
  Multivector s(n);
  for (int i = 0; i < n; ++i) {
    Multivector w = interior(Eigen::VectorXd::Unit(n, i), T);
    s += wedge(w, w);
  }
  return 0.5 * s;
}

Eigen::VectorXd torsion_vector(const Multivector& T, int x, int y) {
  const int n = T.dim();
  Eigen::VectorXd v(n);
  for (int k = 0; k < n; ++k) v(k) = T.component({x + 1, y + 1, k + 1});
  return v;
}

Multivector sigma_T_cyclic(const Multivector& T) {
  const int n = T.dim();
  std::vector<Eigen::VectorXd> tv(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) tv[x * n + y] = torsion_vector(T, x, y);
  auto g = [&](int x, int y, int z, int v) { return tv[x * n + y].dot(tv[z * n + v]); };
  Multivector s(n);
  if (n < 4) return s;
  for (Mask m : masks_of_grade(n, 4)) {
    auto idx = mask_indices(m);
    int a = idx[0] - 1, b = idx[1] - 1, c = idx[2] - 1, d = idx[3] - 1;
    s.set(m, g(a, b, c, d) + g(b, c, a, d) + g(c, a, b, d));
  }
  return s;
}

Eigen::MatrixXd ker_T(const Multivector& T, const Tolerance& tol) {
  const int n = T.dim();
  const int N = n * (n - 1) / 2;
  Eigen::MatrixXd C(N, n);
  for (int i = 0; i < n; ++i) C.col(i) = interior(Eigen::VectorXd::Unit(n, i), T).grade_vector(2);
  return null_space(C, tol.eps_rank);
}

SkewNormalForm skew_normal_form(const Multivector& w, const Tolerance& tol) {
  const int n = w.dim();
  Eigen::MatrixXd A = two_form_to_endo(w.grade(2));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A.transpose() * A);
  Eigen::VectorXd rho = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const double top = rho.size() ? rho.maxCoeff() : 0.0;
  const double thr = tol.eps_rank * std::max(1.0, top);
  const double gap = 1e-6 * std::max(1.0, top);

  SkewNormalForm out;
  std::vector<Eigen::VectorXd> cols;
  // clusters from the top down; eigenvalues are ascending
  int hi = n - 1;
  while (hi >= 0 && rho(hi) > thr) {
    int lo = hi;
    while (lo - 1 >= 0 && rho(lo - 1) > thr && rho(hi) - rho(lo - 1) <= gap) --lo;
    Eigen::MatrixXd E = es.eigenvectors().middleCols(lo, hi - lo + 1);
    while (E.cols() >= 2) {
      Eigen::VectorXd v = E.col(0);
      Eigen::VectorXd Av = A * v;
      double r = Av.norm();
      Eigen::VectorXd u = Av / r;
      cols.push_back(v);
      cols.push_back(u);
      out.spectrum.push_back(r);
      Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n) - v * v.transpose() - u * u.transpose();
      E = range_basis(P * E, 1e-6);
    }
    hi = lo - 1;
  }
  out.rank = 2 * static_cast<int>(out.spectrum.size());
  if (hi >= 0) {
    Eigen::MatrixXd K = es.eigenvectors().leftCols(hi + 1);
    for (int k = 0; k < K.cols(); ++k) cols.push_back(K.col(k));
  }
  out.frame.resize(n, n);
  for (int k = 0; k < n; ++k) out.frame.col(k) = cols[k];
  while (static_cast<int>(out.spectrum.size()) < n / 2) out.spectrum.push_back(0.0);
  return out;
}

std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::D3: return "D3";
    case CaseLabel::D4: return "D4";
    case CaseLabel::D5_A: return "D5_A";
    case CaseLabel::D5_B1: return "D5_B1";
    case CaseLabel::D5_B2: return "D5_B2";
    case CaseLabel::D6_A: return "D6_A";
    case CaseLabel::D6_B: return "D6_B";
    case CaseLabel::D6_C_rank4: return "D6_C_rank4";
    case CaseLabel::D6_D: return "D6_D";
  }
  return "?";
}

namespace {

bool all_equal(const std::vector<double>& v, int count, double eps_rank) {
  if (count <= 1) return true;
  double mean = std::accumulate(v.begin(), v.begin() + count, 0.0) / count;
  auto [mn, mx] = std::minmax_element(v.begin(), v.begin() + count);
  return *mx - *mn <= eps_rank * std::max(mean, 1e-300);
}

}  // namespace

ClassificationReport classify(const Multivector& T, const Tolerance& tol) {
  tol.validate();
  const int n = T.dim();
  if (n < 3 || n > 6) throw UnsupportedDimension("classify supports dimensions 3 to 6");
  if (!T.is_homogeneous(3, tol.eps_coeff)) throw std::invalid_argument("classify expects a 3-form");
  const Multivector T3 = T.grade(3);

  ClassificationReport rep;
  rep.dim = n;
  rep.sigma_T = sigma_T(T3).normalized(tol.eps_coeff);
  rep.ker_T_dim = static_cast<int>(ker_T(T3, tol).cols());
  rep.iso_T_dim = isotropy_algebra(T3, tol).size();
  rep.g_T_dim = g_T(T3, tol).size();
  rep.adapted_frame = Eigen::MatrixXd::Identity(n, n);
  const bool sigma_zero = rep.sigma_T.max_abs() <= tol.eps_coeff;

  switch (n) {
    case 3:
      rep.case_label = CaseLabel::D3;
      rep.parameters["lambda"] = T3[0b111];
      break;
    case 4:
      rep.case_label = CaseLabel::D4;
      rep.distinguished_vector = hodge(T3).as_vector();
      break;
    case 5: {
      SkewNormalForm snf = skew_normal_form(hodge(T3), tol);
      rep.spectrum_source = "*T";
      rep.star_sigma_rank = snf.rank;
      rep.skew_spectrum = snf.spectrum;
      rep.adapted_frame = snf.frame;
      if (sigma_zero) {
        rep.case_label = CaseLabel::D5_A;
        break;
      }
      bool equal = all_equal(snf.spectrum, 2, tol.eps_rank);
      rep.case_label = equal ? CaseLabel::D5_B2 : CaseLabel::D5_B1;
      rep.parameters["rho"] = snf.spectrum[0];
      rep.parameters["lambda"] = snf.spectrum[1];
      Eigen::VectorXd xi = hodge(rep.sigma_T).as_vector();
      rep.distinguished_vector = xi / xi.norm();
      break;
    }
    case 6: {
      rep.spectrum_source = "*sigma_T";
      if (sigma_zero) {
        rep.case_label = CaseLabel::D6_A;
        rep.skew_spectrum = {0.0, 0.0, 0.0};
        break;
      }
      SkewNormalForm snf = skew_normal_form(hodge(rep.sigma_T), tol);
      rep.star_sigma_rank = snf.rank;
      rep.skew_spectrum = snf.spectrum;
      rep.adapted_frame = snf.frame;
      if (snf.rank == 2) {
        rep.case_label = CaseLabel::D6_B;
        Eigen::MatrixXd Q(2, 2);
        Multivector c0 = interior(Eigen::VectorXd(snf.frame.col(0)), T3);
        Multivector c1 = interior(Eigen::VectorXd(snf.frame.col(1)), T3);
        Q << inner(c0, c0), inner(c0, c1), inner(c1, c0), inner(c1, c1);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q);
        double a2 = std::max(0.0, es.eigenvalues()(1)) / 2.0;
        double b2 = std::max(0.0, es.eigenvalues()(0)) / 2.0;
        rep.parameters["alpha"] = std::sqrt(a2);
        rep.parameters["beta"] = std::sqrt(b2);
        rep.parameters["rho"] = snf.spectrum[0];
      } else if (snf.rank == 4) {
        rep.case_label = CaseLabel::D6_C_rank4;
        rep.advisories.push_back(
            "rank(*sigma_T) = 4: such a 3-form exists algebraically but cannot be the torsion of a connection "
            "with parallel skew torsion");
      } else {
        rep.case_label = CaseLabel::D6_D;
        bool equal = all_equal(snf.spectrum, 3, tol.eps_rank);
        rep.flags["eigen_equal"] = equal;
        rep.parameters["eigenvalue_mean"] = (snf.spectrum[0] + snf.spectrum[1] + snf.spectrum[2]) / 3.0;
        if (!equal)
          rep.advisories.push_back("eigenvalues of *sigma_T differ: no parallel almost Hermitian structure");
      }
      break;
    }
  }
  return rep;
}

ContactData contact_structure(const Multivector& T, const Eigen::VectorXd& xi_in, const Tolerance& tol) {
  const int n = T.dim();
  if (n % 2 == 0) throw std::invalid_argument("contact structure needs odd dimension");
  if (xi_in.size() != n || xi_in.norm() == 0.0) throw std::invalid_argument("bad Reeb vector");
  ContactData c;
  c.xi = xi_in / xi_in.norm();
  c.eta = Multivector::vector(c.xi);
  c.d_eta = interior(c.xi, T).grade(2);
  SkewNormalForm snf = skew_normal_form(c.d_eta, tol);
  if (snf.rank != n - 1) throw std::invalid_argument("d eta is degenerate on the contact distribution");
  c.frame = snf.frame;
  if (c.frame.col(n - 1).dot(c.xi) < 0) c.frame.col(n - 1) *= -1.0;
  c.values.assign(snf.spectrum.begin(), snf.spectrum.begin() + (n - 1) / 2);
  c.F = Multivector(n);
  for (int k = 0; k + 1 < n; k += 2)
    c.F += wedge(Multivector::vector(c.frame.col(k)), Multivector::vector(c.frame.col(k + 1)));
  c.phi = two_form_to_endo(-c.F);
  c.rho = c.values[0];
  c.lambda = c.values.size() > 1 ? c.values[1] : c.values[0];
  c.quasi_sasaki = true;
  c.alpha_sasaki = all_equal(c.values, static_cast<int>(c.values.size()), tol.eps_rank);
  c.sasaki = c.alpha_sasaki && std::abs(c.values[0] - 2.0) <= tol.eps_rank * 2.0;
  Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd P = I - c.xi * c.xi.transpose();
  c.phi_square_residual = (c.phi * c.phi + P).cwiseAbs().maxCoeff();
  c.metric_residual = (c.phi.transpose() * c.phi - P).cwiseAbs().maxCoeff();
  c.torsion_residual = max_diff(T, wedge(c.eta, c.d_eta));
  return c;
}

ContactData contact_structure_dim5(const Multivector& T, const Tolerance& tol) {
  if (T.dim() != 5) throw std::invalid_argument("contact_structure_dim5 needs dimension 5");
  Multivector s = sigma_T(T);
  if (s.max_abs() <= tol.eps_coeff) throw std::invalid_argument("sigma_T vanishes");
  Eigen::VectorXd xi = hodge(s).as_vector();
  return contact_structure(T, xi / xi.norm(), tol);
}

HermitianData hermitian_from_sigma(const Multivector& T, const Tolerance& tol) {
  if (T.dim() != 6) throw std::invalid_argument("hermitian_from_sigma needs dimension 6");
  Multivector w = hodge(sigma_T(T));
  SkewNormalForm snf = skew_normal_form(w, tol);
  if (snf.rank != 6) throw std::invalid_argument("rank(*sigma_T) is not 6");
  if (!all_equal(snf.spectrum, 3, tol.eps_rank))
    throw std::invalid_argument("eigenvalues of *sigma_T are not equal");
  double mean = (snf.spectrum[0] + snf.spectrum[1] + snf.spectrum[2]) / 3.0;

  HermitianData h;
  h.Omega = (1.0 / mean) * w;
  h.J = two_form_to_endo(h.Omega);
  h.frame = snf.frame;
  h.j_square_residual = (h.J * h.J + Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff();

  auto e = [](std::initializer_list<int> idx) { return Multivector::basis(6, idx); };
  Multivector Tf = in_frame(T, h.frame);
  Multivector psi_p = -1.0 * e({1, 3, 5}) + e({2, 4, 5}) + e({2, 3, 6}) + e({1, 4, 6});
  Multivector psi_m = -1.0 * e({2, 4, 6}) + e({1, 3, 6}) + e({1, 4, 5}) + e({2, 3, 5});
  Multivector w1 = (inner(Tf, psi_p) / inner(psi_p, psi_p)) * psi_p +
                   (inner(Tf, psi_m) / inner(psi_m, psi_m)) * psi_m;
  Multivector om = e({1, 2}) + e({3, 4}) + e({5, 6});
  Multivector w4(6);
  for (int k = 1; k <= 6; ++k) {
    Multivector b = wedge(e({k}), om);
    w4 += (inner(Tf, b) / inner(b, b)) * b;
  }
  Multivector w3 = Tf - w1 - w4;
  h.w1_part = transform(w1, h.frame);
  h.w3_part = transform(w3, h.frame);
  h.w4_part = transform(w4, h.frame);

  h.lee_form = Eigen::VectorXd::Zero(6);
  for (int k = 0; k < 6; ++k)
    for (auto [i, j] : pair_list(6)) h.lee_form(k) += h.Omega[(1u << i) | (1u << j)] * T.component({i + 1, j + 1, k + 1});

  double scale = std::max(1.0, T.norm());
  double eps = tol.eps_coeff * scale;
  h.w4_vanishes = h.w4_part.norm() <= eps;
  h.pure_w1 = h.w3_part.norm() <= eps && h.w4_vanishes;
  h.pure_w3 = h.w1_part.norm() <= eps && h.w4_vanishes;
  return h;
}

}  // namespace nred
