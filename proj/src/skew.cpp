#include "nred/skew.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "nred/linalg.hpp"

namespace nred {

SkewEndo two_form_to_endo(const Multivector& w, double eps) {
  if (!w.is_homogeneous(2, eps)) throw std::invalid_argument("two_form_to_endo: not a 2-form");
  const int n = w.dim();
  SkewEndo A = SkewEndo::Zero(n, n);
  for (auto [i, j] : pair_list(n)) {
    double c = w[(1u << i) | (1u << j)];
    A(j, i) = c;
    A(i, j) = -c;
  }
  return A;
}

Multivector endo_to_two_form(const SkewEndo& A, double eps) {
  const int n = static_cast<int>(A.rows());
  if (A.cols() != n) throw std::invalid_argument("endo_to_two_form: not square");
  if ((A + A.transpose()).cwiseAbs().maxCoeff() > eps)
    throw std::invalid_argument("endo_to_two_form: not antisymmetric");
  Multivector w(n);
  for (auto [i, j] : pair_list(n)) w.set((1u << i) | (1u << j), 0.5 * (A(j, i) - A(i, j)));
  return w;
}

SkewEndo elementary(int dim, int i, int j) {
  return two_form_to_endo(Multivector::basis(dim, {i, j}));
}

double so_inner(const SkewEndo& A, const SkewEndo& B) { return -0.5 * (A * B).trace(); }

SkewEndo commutator(const SkewEndo& A, const SkewEndo& B) { return A * B - B * A; }

Multivector act_on_form(const Eigen::MatrixXd& A, const Multivector& a) {
  const int n = a.dim();
  if (A.rows() != n || A.cols() != n) throw std::invalid_argument("act_on_form: size mismatch");
  Multivector out(n);
  for (int I = 0; I < a.slots(); ++I) {
    // (A.a)_I = -sum_p sum_m A(m, i_p) a(I with i_p -> m)
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      Mask bi = 1u << i;
      if (!(I & bi)) continue;
      for (int m = 0; m < n; ++m) {
        double Ami = A(m, i);
        if (Ami == 0.0) continue;
        if (m == i) {
          acc -= Ami * a[I];
          continue;
        }
        Mask bm = 1u << m;
        if (I & bm) continue;
        Mask J = (I & ~bi) | bm;
        if (a[J] == 0.0) continue;
        Mask lo = std::min(bi, bm), hi = std::max(bi, bm);
        int between = popcount(I & ~bi & (hi - 1) & ~(lo | (lo - 1)));
        acc -= Ami * ((between & 1) ? -1.0 : 1.0) * a[J];
      }
    }
    out.set(I, acc);
  }
  return out;
}

std::vector<double> act_on_tensor4(const Eigen::MatrixXd& A, const std::vector<double>& t, int n) {
  std::vector<double> out(t.size(), 0.0);
  auto at = [&](int x, int y, int z, int v) { return t[((x * n + y) * n + z) * n + v]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int v = 0; v < n; ++v) {
          double s = 0.0;
          for (int m = 0; m < n; ++m)
            s += A(m, x) * at(m, y, z, v) + A(m, y) * at(x, m, z, v) + A(m, z) * at(x, y, m, v) +
                 A(m, v) * at(x, y, z, m);
          out[((x * n + y) * n + z) * n + v] = -s;
        }
  return out;
}

CurvatureOperator act_on_curvature(const Eigen::MatrixXd& A, const CurvatureOperator& R) {
  return CurvatureOperator::from_tensor(R.dim(), act_on_tensor4(A, R.tensor(), R.dim()));
}

Eigen::MatrixXd SubalgebraBasis::coordinates() const {
  const int N = dim_V * (dim_V - 1) / 2;
  Eigen::MatrixXd C(N, size());
  for (int k = 0; k < size(); ++k) C.col(k) = two_form_vector(endo_to_two_form(gens[k]));
  return C;
}

double SubalgebraBasis::closure_residual() const {
  Eigen::MatrixXd C = coordinates();
  double worst = 0.0;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b) {
      Eigen::VectorXd v = two_form_vector(endo_to_two_form(commutator(gens[a], gens[b])));
      double r = 0.0;
      solve_in_span(C, v, &r);
      worst = std::max(worst, r);
    }
  return worst;
}

namespace {

SubalgebraBasis from_coordinates(int dim, const Eigen::MatrixXd& Q) {
  SubalgebraBasis out;
  out.dim_V = dim;
  for (int k = 0; k < Q.cols(); ++k)
    out.gens.push_back(two_form_to_endo(Multivector::from_grade_vector(dim, 2, Q.col(k))));
  return out;
}

Eigen::MatrixXd coords_of(int dim, const std::vector<SkewEndo>& gens) {
  const int N = dim * (dim - 1) / 2;
  Eigen::MatrixXd C(N, gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    C.col(static_cast<int>(k)) = two_form_vector(endo_to_two_form(gens[k]));
  return C;
}

}  // namespace

SubalgebraBasis span_of(int dim, const std::vector<SkewEndo>& gens, const Tolerance& tol) {
  return from_coordinates(dim, range_basis(coords_of(dim, gens), tol.eps_rank));
}

SubalgebraBasis lie_closure(int dim, const std::vector<SkewEndo>& gens, const Tolerance& tol) {
  check_dim(dim);
  const int N = dim * (dim - 1) / 2;
  Eigen::MatrixXd Q = range_basis(coords_of(dim, gens), tol.eps_rank);
  for (int round = 0; round < N && Q.cols() > 0; ++round) {
    SubalgebraBasis cur = from_coordinates(dim, Q);
    std::vector<SkewEndo> all = cur.gens;
    for (int a = 0; a < cur.size(); ++a)
      for (int b = a + 1; b < cur.size(); ++b) all.push_back(commutator(cur.gens[a], cur.gens[b]));
    Eigen::MatrixXd next = range_basis(coords_of(dim, all), tol.eps_rank);
    bool grown = next.cols() > Q.cols();
    Q = next;
    if (!grown) break;
  }
  return from_coordinates(dim, Q);
}

SubalgebraBasis g_T(const Multivector& T, const Tolerance& tol) {
  const int n = T.dim();
  std::vector<SkewEndo> gens;
  for (int i = 0; i < n; ++i) {
    Multivector w = interior(Eigen::VectorXd::Unit(n, i), T).grade(2);
    if (w.max_abs() > tol.eps_coeff) gens.push_back(two_form_to_endo(w));
  }
  if (gens.empty()) return SubalgebraBasis{n, {}};
  return lie_closure(n, gens, tol);
}

SubalgebraBasis isotropy_algebra(const Multivector& T, const Tolerance& tol) {
  const int n = T.dim();
  const auto& P = pair_list(n);
  Eigen::MatrixXd M(T.slots(), P.size());
  for (std::size_t k = 0; k < P.size(); ++k) {
    Multivector img = act_on_form(elementary(n, P[k].first + 1, P[k].second + 1), T);
    for (int m = 0; m < T.slots(); ++m) M(m, static_cast<int>(k)) = img[m];
  }
  return from_coordinates(n, null_space(M, tol.eps_rank));
}

std::vector<Eigen::MatrixXd> invariant_subspaces(int dim, const std::vector<SkewEndo>& h, unsigned seed,
                                                 const Tolerance& tol) {
  const int n = dim;
  // basis of symmetric matrices
  std::vector<Eigen::MatrixXd> sym;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
      S(i, j) = S(j, i) = 1.0;
      sym.push_back(S);
    }
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(std::max<std::size_t>(1, h.size()) * n * n, sym.size());
  for (std::size_t s = 0; s < sym.size(); ++s)
    for (std::size_t k = 0; k < h.size(); ++k) {
      Eigen::MatrixXd C = sym[s] * h[k] - h[k] * sym[s];
      L.block(k * n * n, s, n * n, 1) = Eigen::Map<Eigen::VectorXd>(C.data(), n * n);
    }
  Eigen::MatrixXd K = null_space(L, tol.eps_rank);

  std::vector<Eigen::MatrixXd> best;
  for (unsigned attempt = 0; attempt < 3; ++attempt) {
    std::mt19937_64 rng(seed + attempt);
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
    for (int c = 0; c < K.cols(); ++c) {
      double w = g(rng);
      for (std::size_t s = 0; s < sym.size(); ++s) S += w * K(s, c) * sym[s];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
    const Eigen::VectorXd& ev = es.eigenvalues();
    double thr = tol.eps_rank * std::max(1.0, ev.cwiseAbs().maxCoeff()) * 10.0;
    std::vector<Eigen::MatrixXd> blocks;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
      if (i == n || ev(i) - ev(i - 1) > thr) {
        blocks.push_back(es.eigenvectors().middleCols(start, i - start));
        start = i;
      }
    }
    if (blocks.size() > best.size()) best = blocks;
  }
  auto lead = [](const Eigen::MatrixXd& B) {
    for (int r = 0; r < B.rows(); ++r)
      if (B.row(r).norm() > 1e-6) return r;
    return static_cast<int>(B.rows());
  };
  std::stable_sort(best.begin(), best.end(),
                   [&](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return lead(a) < lead(b); });
  return best;
}

std::vector<Eigen::MatrixXd> invariant_subspaces(const SubalgebraBasis& h, unsigned seed, const Tolerance& tol) {
  return invariant_subspaces(h.dim_V, h.gens, seed, tol);
}

}  // namespace nred
