#include "nred/lie_identify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Eigenvalues>

namespace nred {

Eigen::MatrixXd killing_form(const LieAlgebraData& L) {
  const int n = L.dim();
  std::vector<Eigen::MatrixXd> ad(n);
  for (int i = 0; i < n; ++i) ad[i] = L.ad_basis(i);
  Eigen::MatrixXd K(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) K(i, j) = K(j, i) = (ad[i] * ad[j]).trace();
  return K;
}

Eigen::MatrixXd bracket_span(const LieAlgebraData& L, const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                             const Tolerance& tol) {
  const int n = L.dim();
  if (A.cols() == 0 || B.cols() == 0) return Eigen::MatrixXd(n, 0);
  Eigen::MatrixXd all(n, A.cols() * B.cols());
  for (int a = 0; a < A.cols(); ++a)
    for (int b = 0; b < B.cols(); ++b) all.col(a * B.cols() + b) = L.bracket(A.col(a), B.col(b));
  return range_basis(all, tol.eps_rank);
}

Eigen::MatrixXd center(const LieAlgebraData& L, const Tolerance& tol) {
  const int n = L.dim();
  Eigen::MatrixXd S(n * n, n);
  for (int i = 0; i < n; ++i) S.block(i * n, 0, n, n) = L.ad_basis(i);
  return null_space(S, tol.eps_rank);
}

namespace {

std::vector<int> series(const LieAlgebraData& L, bool derived, const Tolerance& tol) {
  const int n = L.dim();
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd cur = g;
  std::vector<int> dims{n};
  while (cur.cols() > 0) {
    Eigen::MatrixXd next = bracket_span(L, derived ? cur : g, cur, tol);
    if (next.cols() == cur.cols()) break;
    dims.push_back(static_cast<int>(next.cols()));
    cur = next;
  }
  return dims;
}

}  // namespace

Fingerprint fingerprint(const LieAlgebraData& L, const Tolerance& tol) {
  Fingerprint f;
  f.dim = L.dim();
  f.killing = inertia(killing_form(L), tol.eps_rank);
  f.derived_dims = series(L, true, tol);
  f.lower_central_dims = series(L, false, tol);
  f.center_dim = static_cast<int>(center(L, tol).cols());
  f.is_nilpotent = f.lower_central_dims.back() == 0;
  f.is_solvable = f.derived_dims.back() == 0;
  f.is_semisimple = f.dim > 0 && f.killing.zero == 0;
  return f;
}

namespace {

struct Named {
  const char* name;
  int dim;
  Inertia killing;
  std::vector<int> derived;
  std::vector<int> lcs;
  int center;
};

const std::vector<Named>& named_algebras() {
  static const std::vector<Named> table = {
      {"heis3", 3, {0, 0, 3}, {3, 1, 0}, {3, 1, 0}, 1},
      {"heis5", 5, {0, 0, 5}, {5, 1, 0}, {5, 1, 0}, 1},
      {"su(2)", 3, {0, 3, 0}, {3}, {3}, 0},
      {"sl(2,R)", 3, {2, 1, 0}, {3}, {3}, 0},
      {"su(2)+su(2)", 6, {0, 6, 0}, {6}, {6}, 0},
      {"sl(2,C)", 6, {3, 3, 0}, {6}, {6}, 0},
      {"su(2)+sl(2,R)", 6, {2, 4, 0}, {6}, {6}, 0},
      {"sl(2,R)+sl(2,R)", 6, {4, 2, 0}, {6}, {6}, 0},
      {"R^3 x su(2)", 6, {0, 3, 3}, {6, 3}, {6, 3}, 3},
      {"R^3 x| su(2)", 6, {0, 3, 3}, {6}, {6}, 0},
      {"n6(0,0,0,12,13,23)", 6, {0, 0, 6}, {6, 3, 0}, {6, 3, 0}, 3},
      {"heis3+heis3", 6, {0, 0, 6}, {6, 2, 0}, {6, 2, 0}, 2},
      {"heis3+su(2)", 6, {0, 3, 3}, {6, 4, 3}, {6, 4, 3}, 1},
      {"heis3+sl(2,R)", 6, {2, 1, 3}, {6, 4, 3}, {6, 4, 3}, 1},
      {"u(2)", 4, {0, 3, 1}, {4, 3}, {4, 3}, 1},
      {"su(3)", 8, {0, 8, 0}, {8}, {8}, 0},
  };
  return table;
}

}  // namespace

std::string identify(const Fingerprint& f) {
  if (f.dim > 0 && f.center_dim == f.dim) return "R^" + std::to_string(f.dim);
  for (const auto& e : named_algebras())
    if (e.dim == f.dim && e.killing == f.killing && e.derived == f.derived_dims && e.lcs == f.lower_central_dims &&
        e.center == f.center_dim)
      return e.name;
  return "unknown";
}

std::string identify(const LieAlgebraData& L, const Tolerance& tol) { return identify(fingerprint(L, tol)); }

namespace {

// Endomorphisms phi with phi[x,y] = [phi x, y]; columns are vec(phi) (column-major).
Eigen::MatrixXd centroid(const LieAlgebraData& L, const Tolerance& tol) {
  const int n = L.dim();
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n * n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const int row = (i * n + j) * n + k;
        for (int l = 0; l < n; ++l) {
          S(row, k + l * n) += L.c(i, j, l);
          S(row, l + i * n) -= L.c(l, j, k);
        }
      }
  return null_space(S, tol.eps_rank);
}

bool is_abelian(const LieAlgebraData& L, double eps) {
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j)
      for (int k = 0; k < L.dim(); ++k)
        if (std::abs(L.c(i, j, k)) > eps) return false;
  return true;
}

}  // namespace

std::vector<Ideal> ideal_decomposition(const LieAlgebraData& L, unsigned seed, const Tolerance& tol) {
  const int n = L.dim();
  std::vector<Ideal> out;
  if (n == 0) return out;
  Eigen::MatrixXd C = centroid(L, tol);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> N(0.0, 1.0);
  Eigen::VectorXd coef(C.cols());
  for (int i = 0; i < coef.size(); ++i) coef(i) = N(gen);
  Eigen::MatrixXd phi = Eigen::Map<const Eigen::MatrixXd>(Eigen::VectorXd(C * coef).data(), n, n);

  Eigen::EigenSolver<Eigen::MatrixXd> es(phi, false);
  const Eigen::VectorXcd ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  const double gap = 1e-4 * scale;

  // Cluster by (re, |im|) so conjugate pairs fall together.
  struct Cluster {
    std::complex<double> z;
    int count;
  };
  std::vector<Cluster> clusters;
  for (int i = 0; i < n; ++i) {
    std::complex<double> z(ev(i).real(), std::abs(ev(i).imag()));
    bool placed = false;
    for (auto& c : clusters)
      if (std::abs(c.z - z) <= gap) {
        ++c.count;
        placed = true;
        break;
      }
    if (!placed) clusters.push_back({z, 1});
  }

  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  auto factor = [&](const Cluster& c) -> Eigen::MatrixXd {
    const bool pair = c.z.imag() > gap;
    Eigen::MatrixXd p = pair ? Eigen::MatrixXd(phi * phi - 2.0 * c.z.real() * phi + std::norm(c.z) * I)
                             : Eigen::MatrixXd(phi - c.z.real() * I);
    const int power = pair ? c.count / 2 : c.count;
    Eigen::MatrixXd q = I;
    for (int k = 0; k < power; ++k) q = q * p;
    return q;
  };

  std::vector<Eigen::MatrixXd> blocks;
  for (std::size_t a = 0; a < clusters.size(); ++a) {
    Eigen::MatrixXd Q = I;
    for (std::size_t b = 0; b < clusters.size(); ++b)
      if (b != a) {
        Eigen::MatrixXd f = factor(clusters[b]);
        Q = Q * (f / std::max(1.0, f.norm()));
      }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Q, Eigen::ComputeFullU);
    blocks.push_back(svd.matrixU().leftCols(clusters[a].count));
  }

  for (const auto& B : blocks) {
    LieAlgebraData sub = restrict_to(L, B);
    if (is_abelian(sub, tol.eps_coeff) && B.cols() > 1) {
      for (int k = 0; k < B.cols(); ++k) {
        Eigen::MatrixXd b1 = B.col(k);
        out.push_back({b1, restrict_to(L, b1), "R^1"});
      }
    } else {
      out.push_back({B, sub, identify(sub, tol)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) {
    if (x.basis.cols() != y.basis.cols()) return x.basis.cols() > y.basis.cols();
    return x.name < y.name;
  });
  return out;
}

}  // namespace nred
