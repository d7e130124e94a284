#include "nred/homogeneous.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nred/linalg.hpp"
#include "nred/skew.hpp"

namespace nred {

Eigen::VectorXd HomogeneousModel::bracket_m(int a, int b) const {
  Eigen::VectorXd v(m_dim());
  for (int k = 0; k < m_dim(); ++k) v(k) = algebra.c(m_idx[a], m_idx[b], m_idx[k]);
  return v;
}

Eigen::VectorXd HomogeneousModel::bracket_h(int a, int b) const {
  Eigen::VectorXd v(h_dim());
  for (int k = 0; k < h_dim(); ++k) v(k) = algebra.c(m_idx[a], m_idx[b], h_idx[k]);
  return v;
}

Eigen::MatrixXd HomogeneousModel::lambda_of(const Eigen::VectorXd& x) const {
  if (!lambda) throw std::invalid_argument("model has no connection map");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m_dim(), m_dim());
  for (int a = 0; a < m_dim(); ++a) A += x(a) * (*lambda)[a];
  return A;
}

Eigen::MatrixXd HomogeneousModel::isotropy_of(const Eigen::VectorXd& h) const {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m_dim(), m_dim());
  for (int a = 0; a < h_dim(); ++a) A += h(a) * isotropy[a];
  return A;
}

std::vector<Eigen::MatrixXd> isotropy_representation(const LieAlgebraData& L, const std::vector<int>& h_idx,
                                                     const std::vector<int>& m_idx) {
  const int n = static_cast<int>(m_idx.size());
  std::vector<Eigen::MatrixXd> out;
  for (int h : h_idx) {
    Eigen::MatrixXd A(n, n);
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a) A(a, b) = L.c(h, m_idx[b], m_idx[a]);
    out.push_back(A);
  }
  return out;
}

HomogeneousModel make_model(LieAlgebraData L, std::vector<int> h_idx, std::vector<int> m_idx, Eigen::MatrixXd metric,
                            std::optional<std::vector<Eigen::MatrixXd>> lambda) {
  HomogeneousModel M;
  M.isotropy = isotropy_representation(L, h_idx, m_idx);
  M.algebra = std::move(L);
  M.h_idx = std::move(h_idx);
  M.m_idx = std::move(m_idx);
  M.metric = std::move(metric);
  M.lambda = std::move(lambda);
  if (M.metric.rows() != M.m_dim() || M.metric.cols() != M.m_dim())
    throw std::invalid_argument("metric size differs from dim m");
  if (M.lambda && static_cast<int>(M.lambda->size()) != M.m_dim())
    throw std::invalid_argument("connection map needs one matrix per m basis element");
  return M;
}

bool ReductiveCheck::ok(const Tolerance& tol) const {
  return h_subalgebra <= tol.eps_coeff && hm_in_m <= tol.eps_coeff && isotropy_skew <= tol.eps_coeff &&
         lambda_skew <= tol.eps_coeff;
}

ReductiveCheck check_reductive(const HomogeneousModel& M) {
  ReductiveCheck r;
  const LieAlgebraData& L = M.algebra;
  for (int a : M.h_idx) {
    for (int b : M.h_idx)
      for (int k : M.m_idx) r.h_subalgebra = std::max(r.h_subalgebra, std::abs(L.c(a, b, k)));
    for (int b : M.m_idx)
      for (int k : M.h_idx) r.hm_in_m = std::max(r.hm_in_m, std::abs(L.c(a, b, k)));
  }
  const Eigen::MatrixXd& g = M.metric;
  for (const auto& A : M.isotropy)
    r.isotropy_skew = std::max(r.isotropy_skew, (g * A + A.transpose() * g).cwiseAbs().maxCoeff());
  if (M.lambda)
    for (const auto& A : *M.lambda)
      r.lambda_skew = std::max(r.lambda_skew, (g * A + A.transpose() * g).cwiseAbs().maxCoeff());
  return r;
}

CheckResult naturally_reductive_check(const HomogeneousModel& M, const Tolerance& tol) {
  const int n = M.m_dim();
  const Eigen::MatrixXd& g = M.metric;
  CheckResult r;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Eigen::VectorXd gxy = g * M.bracket_m(x, y);
      for (int z = 0; z < n; ++z) {
        double v = gxy(z) + g.row(y).dot(M.bracket_m(x, z));
        r.residual = std::max(r.residual, std::abs(v));
      }
    }
  r.passes = r.residual <= tol.eps_coeff;
  return r;
}

std::vector<Eigen::MatrixXd> levi_civita_map(const HomogeneousModel& M) {
  const int n = M.m_dim();
  const Eigen::MatrixXd& g = M.metric;
  Eigen::MatrixXd ginv = g.inverse();
  std::vector<Eigen::VectorXd> br(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) br[a * n + b] = M.bracket_m(a, b);
  std::vector<Eigen::MatrixXd> out(n, Eigen::MatrixXd::Zero(n, n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Eigen::VectorXd ulow(n);
      for (int z = 0; z < n; ++z) ulow(z) = g.row(y).dot(br[z * n + x]) + g.row(x).dot(br[z * n + y]);
      out[x].col(y) = 0.5 * br[x * n + y] + 0.5 * ginv * ulow;
    }
  return out;
}

std::vector<Eigen::MatrixXd> characteristic_connection(const HomogeneousModel& M, const Multivector& T) {
  const int n = M.m_dim();
  Eigen::MatrixXd ginv = M.metric.inverse();
  std::vector<Eigen::MatrixXd> out = levi_civita_map(M);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Eigen::VectorXd low(n);
      for (int z = 0; z < n; ++z) low(z) = T.component({x + 1, y + 1, z + 1});
      out[x].col(y) += 0.5 * ginv * low;
    }
  return out;
}

TorsionResult torsion_of(const HomogeneousModel& M, const std::vector<Eigen::MatrixXd>& Lambda) {
  const int n = M.m_dim();
  TorsionResult r;
  r.lowered.assign(n * n * n, 0.0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Eigen::VectorXd t = Lambda[x].col(y) - Lambda[y].col(x) - M.bracket_m(x, y);
      Eigen::VectorXd low = M.metric * t;
      for (int z = 0; z < n; ++z) r.lowered[(x * n + y) * n + z] = low(z);
    }
  auto at = [&](int x, int y, int z) { return r.lowered[(x * n + y) * n + z]; };
  r.T = Multivector(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        double skew = (at(x, y, z) + at(y, z, x) + at(z, x, y)) / 3.0;
        r.non_skew_residual = std::max(r.non_skew_residual, std::abs(at(x, y, z) - skew));
        if (x < y && y < z) r.T.set((1u << x) | (1u << y) | (1u << z), skew);
      }
  return r;
}

TorsionResult invariant_torsion(const HomogeneousModel& M) {
  if (!M.lambda) throw std::invalid_argument("model has no connection map");
  return torsion_of(M, *M.lambda);
}

CurvatureResult curvature_of(const HomogeneousModel& M, const std::vector<Eigen::MatrixXd>& Lambda) {
  const int n = M.m_dim();
  CurvatureResult r;
  r.lowered.assign(n * n * n * n, 0.0);
  auto lam = [&](const Eigen::VectorXd& v) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n; ++a) A += v(a) * Lambda[a];
    return A;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Eigen::MatrixXd Rxy = Lambda[x] * Lambda[y] - Lambda[y] * Lambda[x] - lam(M.bracket_m(x, y)) -
                            M.isotropy_of(M.bracket_h(x, y));
      Eigen::MatrixXd low = M.metric * Rxy;  // low(v, z) = g(R(x,y) e_z, e_v)
      for (int z = 0; z < n; ++z)
        for (int v = 0; v < n; ++v) r.lowered[((x * n + y) * n + z) * n + v] = low(v, z);
    }
  r.R = CurvatureOperator::from_tensor(n, r.lowered);
  auto at = [&](int x, int y, int z, int v) { return r.lowered[((x * n + y) * n + z) * n + v]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int v = 0; v < n; ++v)
          r.symmetry_residual = std::max(r.symmetry_residual, std::abs(at(x, y, z, v) - at(z, v, x, y)));
  return r;
}

CurvatureResult invariant_curvature(const HomogeneousModel& M) {
  if (!M.lambda) throw std::invalid_argument("model has no connection map");
  return curvature_of(M, *M.lambda);
}

Eigen::MatrixXd ricci_from_tensor(const std::vector<double>& t, const Eigen::MatrixXd& metric) {
  const int n = static_cast<int>(metric.rows());
  Eigen::MatrixXd ginv = metric.inverse();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ric(x, y) += ginv(i, j) * t[((x * n + i) * n + j) * n + y];
  return ric;
}

Eigen::MatrixXd ricci_riemannian(const HomogeneousModel& M) {
  return ricci_from_tensor(curvature_of(M, levi_civita_map(M)).lowered, M.metric);
}

EinsteinResult einstein_check(const Eigen::MatrixXd& ric, double eps) {
  EinsteinResult e;
  const int n = static_cast<int>(ric.rows());
  e.lambda = ric.trace() / n;
  e.residual = (ric - e.lambda * Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  e.is_einstein = e.residual <= eps;
  return e;
}

CheckResult parallelism_check(const HomogeneousModel& M, const Multivector& T, const Tolerance& tol) {
  if (!M.lambda) throw std::invalid_argument("model has no connection map");
  CheckResult r;
  for (const auto& A : *M.lambda) r.residual = std::max(r.residual, act_on_form(A, T).max_abs());
  for (const auto& A : M.isotropy) r.residual = std::max(r.residual, act_on_form(A, T).max_abs());
  r.passes = r.residual <= tol.eps_coeff;
  return r;
}

CheckResult parallelism_check(const HomogeneousModel& M, const CurvatureOperator& R, const Tolerance& tol) {
  if (!M.lambda) throw std::invalid_argument("model has no connection map");
  CheckResult r;
  const std::vector<double> t = R.tensor();
  auto worst = [&](const Eigen::MatrixXd& A) {
    double w = 0.0;
    for (double v : act_on_tensor4(A, t, R.dim())) w = std::max(w, std::abs(v));
    return w;
  };
  for (const auto& A : *M.lambda) r.residual = std::max(r.residual, worst(A));
  for (const auto& A : M.isotropy) r.residual = std::max(r.residual, worst(A));
  r.passes = r.residual <= tol.eps_coeff;
  return r;
}

Multivector invariant_d(const HomogeneousModel& M, const Multivector& a, const Tolerance& tol) {
  const int n = M.m_dim();
  if (a.dim() != n) throw std::invalid_argument("form dimension differs from dim m");
  double inv = 0.0;
  for (const auto& A : M.isotropy) inv = std::max(inv, act_on_form(A, a).max_abs());
  if (inv > tol.eps_coeff) throw NotInvariant("form is not ad(h)-invariant");

  std::vector<Eigen::VectorXd> br(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) br[x * n + y] = M.bracket_m(x, y);
  Multivector out(n);
  for (int k = 0; k < n; ++k) {
    const Multivector ak = a.grade(k);
    if (ak.max_abs() == 0.0) continue;
    for (Mask m : masks_of_grade(n, k + 1)) {
      std::vector<int> idx = mask_indices(m);  // X_0..X_k
      double s = 0.0;
      for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
          std::vector<int> rest;
          for (int p = 0; p <= k; ++p)
            if (p != i && p != j) rest.push_back(idx[p]);
          const Eigen::VectorXd& b = br[(idx[i] - 1) * n + (idx[j] - 1)];
          double v = 0.0;
          for (int q = 0; q < n; ++q) {
            if (b(q) == 0.0) continue;
            std::vector<int> full{q + 1};
            full.insert(full.end(), rest.begin(), rest.end());
            v += b(q) * ak.component(full);
          }
          s += (((i + j) & 1) ? -1.0 : 1.0) * v;
        }
      out.add(m, s);
    }
  }
  return out;
}

Eigen::MatrixXd parallel_two_forms(const HomogeneousModel& M, const Tolerance& tol) {
  const int n = M.m_dim();
  const int N = n * (n - 1) / 2;
  std::vector<Eigen::MatrixXd> ops = M.isotropy;
  if (M.lambda) ops.insert(ops.end(), M.lambda->begin(), M.lambda->end());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(std::max<std::size_t>(1, ops.size()) * N, N);
  const auto& masks = masks_of_grade(n, 2);
  for (int c = 0; c < N; ++c) {
    Multivector w(n);
    w.set(masks[c], 1.0);
    for (std::size_t o = 0; o < ops.size(); ++o) L.block(o * N, c, N, 1) = act_on_form(ops[o], w).grade_vector(2);
  }
  return null_space(L, tol.eps_rank);
}

HomogeneousModel model_from_nomizu(const NomizuData& d, const Tolerance& tol) {
  LieAlgebraData L = build_lie_algebra(d, tol);
  const int k = static_cast<int>(d.h.size());
  std::vector<int> h_idx, m_idx;
  for (int a = 0; a < k; ++a) h_idx.push_back(a);
  for (int i = 0; i < d.dim_V; ++i) m_idx.push_back(k + i);
  std::vector<Eigen::MatrixXd> lam(d.dim_V, Eigen::MatrixXd::Zero(d.dim_V, d.dim_V));
  return make_model(std::move(L), h_idx, m_idx, Eigen::MatrixXd::Identity(d.dim_V, d.dim_V), lam);
}

NomizuData nomizu_from_model(const Multivector& T, const CurvatureOperator& R, const Tolerance& tol) {
  const int n = T.dim();
  std::vector<SkewEndo> images;
  for (auto [i, j] : pair_list(n)) {
    Multivector w = R.apply(i, j);
    if (w.max_abs() > tol.eps_coeff) images.push_back(two_form_to_endo(w));
  }
  NomizuData d;
  d.dim_V = n;
  if (!images.empty()) d.h = lie_closure(n, images, tol).gens;
  d.T = T;
  d.R = R;
  return d;
}

}  // namespace nred
