#include "nred/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nred {

CliffordElement::CliffordElement(int dim) : dim_(dim) { check_dim(dim); }

CliffordElement CliffordElement::scalar(int dim, double s) {
  CliffordElement e(dim);
  e.c_[0] = s;
  return e;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (int m = 0; m < slots(); ++m) c_[m] += o.c_[m];
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (int m = 0; m < slots(); ++m) c_[m] -= o.c_[m];
  return *this;
}

CliffordElement& CliffordElement::operator*=(double s) {
  for (int m = 0; m < slots(); ++m) c_[m] *= s;
  return *this;
}

double CliffordElement::max_abs() const {
  double r = 0.0;
  for (int m = 0; m < slots(); ++m) r = std::max(r, std::abs(c_[m]));
  return r;
}

double CliffordElement::max_nonscalar() const {
  double r = 0.0;
  for (int m = 1; m < slots(); ++m) r = std::max(r, std::abs(c_[m]));
  return r;
}

CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
CliffordElement operator*(double s, CliffordElement a) { return a *= s; }

int clifford_sign(Mask a, Mask b) {
  int s = reorder_sign(a, b);
  return (popcount(a & b) & 1) ? -s : s;
}

CliffordElement cl_mul(const CliffordElement& a, const CliffordElement& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  CliffordElement out(a.dim());
  const int n = a.slots();
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0.0) continue;
      out.add(i ^ j, clifford_sign(i, j) * a[i] * b[j]);
    }
  }
  return out;
}

Multivector grade_part(const CliffordElement& a, int k) {
  if (k < 0 || k > a.dim()) throw std::out_of_range("grade out of range");
  Multivector out(a.dim());
  for (Mask m : masks_of_grade(a.dim(), k)) out.set(m, a[m]);
  return out;
}

CliffordElement embed_form(const Multivector& a) {
  CliffordElement out(a.dim());
  for (int m = 0; m < a.slots(); ++m) out.add(m, a[m]);
  return out;
}

CliffordElement embed_curvature(const CurvatureOperator& R, double eps) {
  if (R.symmetry_residual() > eps) throw std::invalid_argument("curvature operator is not symmetric");
  const int n = R.dim();
  CliffordElement out(n);
  const auto& P = pair_list(n);
  for (std::size_t I = 0; I < P.size(); ++I) {
    Mask a = (1u << P[I].first) | (1u << P[I].second);
    for (std::size_t J = 0; J < P.size(); ++J) {
      double v = R.matrix()(I, J);
      if (v == 0.0) continue;
      Mask b = (1u << P[J].first) | (1u << P[J].second);
      out.add(a ^ b, clifford_sign(a, b) * v);
    }
  }
  return out;
}

CliffordBianchi bianchi_clifford_check(const Multivector& T, const CurvatureOperator& R,
                                       const Tolerance& tol) {
  if (T.dim() != R.dim()) throw std::invalid_argument("dimension mismatch");
  CliffordElement t = embed_form(T);
  CliffordElement s = cl_mul(t, t) + embed_curvature(R, tol.eps_coeff);
  CliffordBianchi out;
  out.residual = s;
  out.residual.add(0, -s[0]);
  out.max_residual = out.residual.max_abs();
  out.is_scalar = out.max_residual <= tol.eps_coeff;
  return out;
}

}  // namespace nred
