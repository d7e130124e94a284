#include "nred/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <omp.h>

#include "nred/torsion.hpp"

namespace nred {

int kernel_threads() { return omp_get_max_threads(); }

std::vector<Multivector> sigma_batch_serial(const std::vector<Multivector>& forms) {
  std::vector<Multivector> out(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) out[i] = sigma_T(forms[i]);
  return out;
}

std::vector<Multivector> sigma_batch_parallel(const std::vector<Multivector>& forms) {
  std::vector<Multivector> out(forms.size());
  const long n = static_cast<long>(forms.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = sigma_T(forms[i]);
  return out;
}

std::vector<CliffordElement> clifford_square_batch_serial(const std::vector<Multivector>& forms) {
  std::vector<CliffordElement> out(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    CliffordElement t = embed_form(forms[i]);
    out[i] = cl_mul(t, t);
  }
  return out;
}

std::vector<CliffordElement> clifford_square_batch_parallel(const std::vector<Multivector>& forms) {
  std::vector<CliffordElement> out(forms.size());
  const long n = static_cast<long>(forms.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    CliffordElement t = embed_form(forms[i]);
    out[i] = cl_mul(t, t);
  }
  return out;
}

namespace {

struct Triple {
  int i, j, k;
};

std::vector<Triple> triples(int d) {
  std::vector<Triple> t;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) t.push_back({i, j, k});
  return t;
}

double jacobi_at(const LieAlgebraData& L, int i, int j, int k) {
  const int d = L.dim();
  double s2 = 0.0;
  for (int m = 0; m < d; ++m) {
    double s = 0.0;
    for (int l = 0; l < d; ++l)
      s += L.c(i, j, l) * L.c(l, k, m) + L.c(j, k, l) * L.c(l, i, m) + L.c(k, i, l) * L.c(l, j, m);
    s2 += s * s;
  }
  return std::sqrt(s2);
}

double bianchi_at(const CurvatureOperator& R, const Multivector& sigma, int a, int b, int c, int d) {
  double lhs = R.value(a, b, c, d) + R.value(b, c, a, d) + R.value(c, a, b, d);
  return std::abs(lhs - sigma.component({a + 1, b + 1, c + 1, d + 1}));
}

}  // namespace

double jacobi_residual_serial(const LieAlgebraData& L) {
  double worst = 0.0;
  for (const Triple& t : triples(L.dim())) worst = std::max(worst, jacobi_at(L, t.i, t.j, t.k));
  return worst;
}

double jacobi_residual_parallel(const LieAlgebraData& L) {
  const std::vector<Triple> ts = triples(L.dim());
  const long n = static_cast<long>(ts.size());
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (long q = 0; q < n; ++q) worst = std::max(worst, jacobi_at(L, ts[q].i, ts[q].j, ts[q].k));
  return worst;
}

double bianchi1_residual_serial(const Multivector& T, const CurvatureOperator& R) {
  const int n = T.dim();
  const Multivector s = sigma_T(T);
  double worst = 0.0;
  for (const Triple& t : triples(n))
    for (int d = 0; d < n; ++d) worst = std::max(worst, bianchi_at(R, s, t.i, t.j, t.k, d));
  return worst;
}

double bianchi1_residual_parallel(const Multivector& T, const CurvatureOperator& R) {
  const int n = T.dim();
  const Multivector s = sigma_T(T);
  const std::vector<Triple> ts = triples(n);
  const long total = static_cast<long>(ts.size()) * n;
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (long q = 0; q < total; ++q) {
    const Triple& t = ts[q / n];
    worst = std::max(worst, bianchi_at(R, s, t.i, t.j, t.k, static_cast<int>(q % n)));
  }
  return worst;
}

}  // namespace nred
