#pragma once

#include <array>

#include "nred/curvature.hpp"
#include "nred/multivector.hpp"
#include "nred/tolerance.hpp"

namespace nred {

// Element of the real Clifford algebra with e_i e_i = -1, dense over all 2^n monomials.
class CliffordElement {
 public:
  CliffordElement() = default;
  explicit CliffordElement(int dim);
  static CliffordElement scalar(int dim, double s);

  int dim() const { return dim_; }
  int slots() const { return 1 << dim_; }
  double operator[](Mask m) const { return c_[m]; }
  void add(Mask m, double v) { c_[m] += v; }

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(double s);
  double max_abs() const;
  // Largest coefficient in grades >= 1.
  double max_nonscalar() const;

 private:
  int dim_ = 0;
  std::array<double, 1 << kMaxDim> c_{};
};

CliffordElement operator+(CliffordElement a, const CliffordElement& b);
CliffordElement operator-(CliffordElement a, const CliffordElement& b);
CliffordElement operator*(double s, CliffordElement a);

// e_A e_B = clifford_sign(A,B) e_{A xor B}
int clifford_sign(Mask a, Mask b);
CliffordElement cl_mul(const CliffordElement& a, const CliffordElement& b);
Multivector grade_part(const CliffordElement& a, int k);
CliffordElement embed_form(const Multivector& a);
// sum_{I,J} M_IJ e_I e_J with e_I = e_i e_j, i.e. 1/4 sum R_ijkl e_i e_j e_k e_l.
CliffordElement embed_curvature(const CurvatureOperator& R, double eps = 1e-9);

struct CliffordBianchi {
  bool is_scalar = false;
  CliffordElement residual;  // grades >= 1 of T^2 + R
  double max_residual = 0.0;
};

CliffordBianchi bianchi_clifford_check(const Multivector& T, const CurvatureOperator& R,
                                       const Tolerance& tol = {});

}  // namespace nred
