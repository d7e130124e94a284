#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nred {

inline constexpr int kMaxDim = 8;

// Bit i-1 of a mask stands for the basis index i.
using Mask = unsigned;

int popcount(Mask m);
// (-1)^{#pairs (i in a, j in b) with i > j}
int reorder_sign(Mask a, Mask b);
std::vector<int> mask_indices(Mask m);  // 1-based, ascending
Mask indices_mask(const std::vector<int>& idx);
// All masks of a given cardinality in lexicographic order of their index tuples.
const std::vector<Mask>& masks_of_grade(int dim, int k);

struct Term {
  std::vector<int> idx;
  double c;
};

class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(int dim);

  // e_{i1...ik} with 1-based indices in any order; the permutation sign is applied
  // and repeated indices give zero.
  static Multivector basis(int dim, std::initializer_list<int> idx, double c = 1.0);
  static Multivector basis(int dim, const std::vector<int>& idx, double c = 1.0);
  // Strict constructor used by readers: indices must be strictly increasing and
  // index sets must not repeat.
  static Multivector from_terms(int dim, const std::vector<Term>& terms);
  static Multivector vector(const Eigen::VectorXd& v);
  static Multivector scalar(int dim, double s);
  // Grade-k form from its coefficients in masks_of_grade(dim, k) order.
  static Multivector from_grade_vector(int dim, int k, const Eigen::VectorXd& v);

  int dim() const { return dim_; }
  double operator[](Mask m) const { return c_[m]; }
  void add(Mask m, double v) { c_[m] += v; }
  void set(Mask m, double v) { c_[m] = v; }
  int slots() const { return 1 << dim_; }

  // Signed component for an arbitrary index tuple (1-based).
  double component(const std::vector<int>& idx) const;
  double component(std::initializer_list<int> idx) const;

  Multivector grade(int k) const;
  Eigen::VectorXd grade_vector(int k) const;
  Eigen::VectorXd as_vector() const { return grade_vector(1); }
  // Highest grade carrying a coefficient above eps; -1 for the zero element.
  int top_grade(double eps) const;
  bool is_homogeneous(int k, double eps) const;

  Multivector normalized(double eps) const;
  std::vector<Term> terms(double eps = 0.0) const;
  double norm() const;
  double max_abs() const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);

 private:
  int dim_ = 0;
  std::array<double, 1 << kMaxDim> c_{};
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator-(Multivector a);
Multivector operator*(double s, Multivector a);
Multivector operator*(Multivector a, double s);

Multivector wedge(const Multivector& a, const Multivector& b);
Multivector interior(const Multivector& x, const Multivector& a);
Multivector interior(const Eigen::VectorXd& x, const Multivector& a);
Multivector hodge(const Multivector& a);
double inner(const Multivector& a, const Multivector& b);
double max_diff(const Multivector& a, const Multivector& b);
bool approx_equal(const Multivector& a, const Multivector& b, double eps);
// Pushforward by a linear map P: e_I -> (P e_i1) ^ ... ^ (P e_ik).
Multivector transform(const Multivector& a, const Eigen::MatrixXd& P);
// Components of a in the orthonormal frame whose columns are F.
Multivector in_frame(const Multivector& a, const Eigen::MatrixXd& F);

std::string to_string(const Multivector& a, double eps = 1e-12);

void check_dim(int dim);

}  // namespace nred
