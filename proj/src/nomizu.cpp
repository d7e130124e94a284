#include "nred/nomizu.hpp"

#include <algorithm>
#include <cmath>

#include "nred/kernels.hpp"
#include "nred/linalg.hpp"
#include "nred/torsion.hpp"

namespace nred {

namespace {

Eigen::MatrixXd h_coordinates(const NomizuData& d) {
  const int N = d.dim_V * (d.dim_V - 1) / 2;
  Eigen::MatrixXd H(N, d.h.size());
  for (std::size_t a = 0; a < d.h.size(); ++a)
    H.col(static_cast<int>(a)) = two_form_vector(endo_to_two_form(d.h[a]));
  return H;
}

}  // namespace

std::string NomizuDiagnostics::failure(const Tolerance& tol) const {
  const double e = tol.eps_coeff;
  if (r_symmetry > e) return "symmetry: R is not symmetric";
  if (h_closure > e) return "closure: h is not closed under the bracket";
  if (t_invariance > e) return "invariance: T is not h-invariant";
  if (r_image > e) return "image: R does not take values in h";
  if (r_equivariance > e) return "equivariance: R is not h-equivariant";
  return "";
}

NomizuDiagnostics check_nomizu(const NomizuData& d) {
  NomizuDiagnostics g;
  const int n = d.dim_V;
  if (d.T.dim() != n || d.R.dim() != n) throw std::invalid_argument("Nomizu data: dimension mismatch");
  g.r_symmetry = d.R.symmetry_residual();
  Eigen::MatrixXd H = h_coordinates(d);
  for (std::size_t a = 0; a < d.h.size(); ++a) {
    g.t_invariance = std::max(g.t_invariance, act_on_form(d.h[a], d.T).max_abs());
    g.r_equivariance = std::max(g.r_equivariance, act_on_curvature(d.h[a], d.R).matrix().cwiseAbs().maxCoeff());
    for (std::size_t b = a + 1; b < d.h.size(); ++b) {
      double r = 0.0;
      solve_in_span(H, two_form_vector(endo_to_two_form(commutator(d.h[a], d.h[b]))), &r);
      g.h_closure = std::max(g.h_closure, r);
    }
  }
  const Eigen::MatrixXd& M = d.R.matrix();
  for (int J = 0; J < M.cols(); ++J) {
    double r = 0.0;
    solve_in_span(H, M.col(J), &r);
    g.r_image = std::max(g.r_image, r);
  }
  return g;
}

LieAlgebraData build_lie_algebra(const NomizuData& d, const Tolerance& tol) {
  NomizuDiagnostics g = check_nomizu(d);
  std::string bad = g.failure(tol);
  if (!bad.empty()) throw NomizuError(bad);

  const int n = d.dim_V;
  const int k = static_cast<int>(d.h.size());
  std::vector<std::string> labels;
  for (int a = 0; a < k; ++a)
    labels.push_back(a < static_cast<int>(d.h_labels.size()) ? d.h_labels[a] : "h" + std::to_string(a + 1));
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  LieAlgebraData L(k + n, labels);
  Eigen::MatrixXd H = h_coordinates(d);

  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      Eigen::VectorXd x = solve_in_span(H, two_form_vector(endo_to_two_form(commutator(d.h[a], d.h[b]))), nullptr);
      for (int c = 0; c < k; ++c) L.set_bracket(a, b, c, x(c));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) L.set_bracket(a, k + i, k + j, d.h[a](j, i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (k > 0) {
        Eigen::VectorXd r = solve_in_span(H, two_form_vector(d.R.apply(i, j)), nullptr);
        for (int c = 0; c < k; ++c) L.set_bracket(k + i, k + j, c, -r(c));
      }
      Eigen::VectorXd t = torsion_vector(d.T, i, j);
      for (int m = 0; m < n; ++m) L.set_bracket(k + i, k + j, k + m, -t(m));
    }

  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(k + n, k + n);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) G(a, b) = so_inner(d.h[a], d.h[b]);
  G.bottomRightCorner(n, n).setIdentity();
  L.inner_product = G;
  return L;
}

CheckResult bianchi1_check(const Multivector& T, const CurvatureOperator& R, const Tolerance& tol) {
  CheckResult r;
  r.residual = bianchi1_residual_parallel(T, R);
  r.passes = r.residual <= tol.eps_coeff;
  return r;
}

CheckResult bianchi2_check(const Multivector& T, const CurvatureOperator& R, const Tolerance& tol) {
  const int n = T.dim();
  std::vector<Multivector> rows(n);
  for (int k = 0; k < n; ++k) rows[k] = Multivector(n);
  auto R_of = [&](const Eigen::VectorXd& v, int z) {
    Multivector w(n);
    for (int k = 0; k < n; ++k)
      if (v(k) != 0.0) w += v(k) * R.apply(k, z);
    return w;
  };
  CheckResult r;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        Multivector s = R_of(torsion_vector(T, x, y), z) + R_of(torsion_vector(T, y, z), x) +
                        R_of(torsion_vector(T, z, x), y);
        r.residual = std::max(r.residual, s.max_abs());
      }
  r.passes = r.residual <= tol.eps_coeff;
  return r;
}

TransversalResult transversal_subalgebra(const LieAlgebraData& L, const Eigen::MatrixXd& candidate,
                                         const std::vector<int>& h_idx, const Tolerance& tol) {
  if (candidate.rows() != L.dim()) throw std::invalid_argument("candidate has wrong row count");
  // keep an independent subset of the candidate columns, in order
  Eigen::MatrixXd B(L.dim(), 0);
  for (int c = 0; c < candidate.cols(); ++c) {
    Eigen::MatrixXd trial(L.dim(), B.cols() + 1);
    trial << B, candidate.col(c);
    if (numerical_rank(trial, tol.eps_rank) > B.cols()) B = trial;
  }
  TransversalResult out;
  out.basis = B;
  out.algebra = restrict_to(L, B, &out.closure_residual);
  if (out.closure_residual > tol.eps_coeff * std::max(1.0, B.cwiseAbs().maxCoeff()))
    throw NotClosed("candidate subspace is not closed under the bracket (residual " +
                    std::to_string(out.closure_residual) + ")");
  Eigen::MatrixXd Hb = Eigen::MatrixXd::Zero(L.dim(), h_idx.size());
  for (std::size_t a = 0; a < h_idx.size(); ++a) Hb(h_idx[a], static_cast<int>(a)) = 1.0;
  Eigen::MatrixXd both(L.dim(), B.cols() + Hb.cols());
  both << B, Hb;
  out.intersection_dim =
      static_cast<int>(B.cols() + Hb.cols()) - numerical_rank(both, tol.eps_rank);
  return out;
}

}  // namespace nred
