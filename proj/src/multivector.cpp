#include "nred/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nred {

int popcount(Mask m) { return std::popcount(m); }

int reorder_sign(Mask a, Mask b) {
  int swaps = 0;
  while (b) {
    int j = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i + 1);
  return out;
}

Mask indices_mask(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= 1u << (i - 1);
  return m;
}

namespace {

void combos(int dim, int k, int start, Mask cur, std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= dim - k; ++i) combos(dim, k - 1, i + 1, cur | (1u << i), out);
}

// Sign that sorts idx, 0 if an index repeats.
int permutation_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] == idx[j + 1]) return 0;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t j = 0; j + 1 < idx.size(); ++j)
    if (idx[j] == idx[j + 1]) return 0;
  return sign;
}

}  // namespace

const std::vector<Mask>& masks_of_grade(int dim, int k) {
  static std::vector<Mask> table[kMaxDim + 1][kMaxDim + 1];
  static std::once_flag once;
  std::call_once(once, [] {
    for (int n = 0; n <= kMaxDim; ++n)
      for (int g = 0; g <= n; ++g) combos(n, g, 0, 0, table[n][g]);
  });
  if (dim < 0 || dim > kMaxDim || k < 0 || k > dim)
    throw std::out_of_range("grade out of range");
  return table[dim][k];
}

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension must lie in 1..8");
}

Multivector::Multivector(int dim) : dim_(dim) { check_dim(dim); }

Multivector Multivector::basis(int dim, std::initializer_list<int> idx, double c) {
  return basis(dim, std::vector<int>(idx), c);
}

Multivector Multivector::basis(int dim, const std::vector<int>& idx, double c) {
  Multivector out(dim);
  for (int i : idx)
    if (i < 1 || i > dim) throw std::out_of_range("basis index outside 1..dim");
  std::vector<int> s = idx;
  int sign = permutation_sign(s);
  if (sign != 0) out.c_[indices_mask(s)] = sign * c;
  return out;
}

Multivector Multivector::from_terms(int dim, const std::vector<Term>& terms) {
  Multivector out(dim);
  std::vector<bool> seen(1u << dim, false);
  for (const auto& t : terms) {
    for (std::size_t i = 0; i < t.idx.size(); ++i) {
      if (t.idx[i] < 1 || t.idx[i] > dim)
        throw std::invalid_argument("index outside 1..dim");
      if (i > 0 && t.idx[i] <= t.idx[i - 1])
        throw std::invalid_argument("index set not strictly increasing");
    }
    Mask m = indices_mask(t.idx);
    if (seen[m]) throw std::invalid_argument("duplicate index set");
    seen[m] = true;
    out.c_[m] = t.c;
  }
  return out;
}

Multivector Multivector::vector(const Eigen::VectorXd& v) {
  Multivector out(static_cast<int>(v.size()));
  for (int i = 0; i < v.size(); ++i) out.c_[1u << i] = v(i);
  return out;
}

Multivector Multivector::scalar(int dim, double s) {
  Multivector out(dim);
  out.c_[0] = s;
  return out;
}

Multivector Multivector::from_grade_vector(int dim, int k, const Eigen::VectorXd& v) {
  Multivector out(dim);
  const auto& ms = masks_of_grade(dim, k);
  if (static_cast<std::size_t>(v.size()) != ms.size())
    throw std::invalid_argument("coefficient vector has wrong length");
  for (std::size_t i = 0; i < ms.size(); ++i) out.c_[ms[i]] = v(static_cast<int>(i));
  return out;
}

double Multivector::component(const std::vector<int>& idx) const {
  std::vector<int> s = idx;
  int sign = permutation_sign(s);
  if (sign == 0) return 0.0;
  return sign * c_[indices_mask(s)];
}

double Multivector::component(std::initializer_list<int> idx) const {
  return component(std::vector<int>(idx));
}

Multivector Multivector::grade(int k) const {
  Multivector out(dim_);
  for (Mask m : masks_of_grade(dim_, k)) out.c_[m] = c_[m];
  return out;
}

Eigen::VectorXd Multivector::grade_vector(int k) const {
  const auto& ms = masks_of_grade(dim_, k);
  Eigen::VectorXd v(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) v(static_cast<int>(i)) = c_[ms[i]];
  return v;
}

int Multivector::top_grade(double eps) const {
  int top = -1;
  for (int m = 0; m < slots(); ++m)
    if (std::abs(c_[m]) > eps) top = std::max(top, popcount(m));
  return top;
}

bool Multivector::is_homogeneous(int k, double eps) const {
  for (int m = 0; m < slots(); ++m)
    if (popcount(m) != k && std::abs(c_[m]) > eps) return false;
  return true;
}

Multivector Multivector::normalized(double eps) const {
  Multivector out = *this;
  for (int m = 0; m < slots(); ++m)
    if (std::abs(out.c_[m]) <= eps) out.c_[m] = 0.0;
  return out;
}

std::vector<Term> Multivector::terms(double eps) const {
  std::vector<Term> out;
  for (int k = 0; k <= dim_; ++k)
    for (Mask m : masks_of_grade(dim_, k))
      if (std::abs(c_[m]) > eps) out.push_back({mask_indices(m), c_[m]});
  return out;
}

double Multivector::norm() const { return std::sqrt(inner(*this, *this)); }

double Multivector::max_abs() const {
  double r = 0.0;
  for (int m = 0; m < slots(); ++m) r = std::max(r, std::abs(c_[m]));
  return r;
}

static void same_dim(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

Multivector& Multivector::operator+=(const Multivector& o) {
  same_dim(*this, o);
  for (int m = 0; m < slots(); ++m) c_[m] += o.c_[m];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  same_dim(*this, o);
  for (int m = 0; m < slots(); ++m) c_[m] -= o.c_[m];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (int m = 0; m < slots(); ++m) c_[m] *= s;
  return *this;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator-(Multivector a) { return a *= -1.0; }
Multivector operator*(double s, Multivector a) { return a *= s; }
Multivector operator*(Multivector a, double s) { return a *= s; }

Multivector wedge(const Multivector& a, const Multivector& b) {
  same_dim(a, b);
  Multivector out(a.dim());
  const int n = a.slots();
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0.0 || (i & j)) continue;
      out.add(i | j, reorder_sign(i, j) * a[i] * b[j]);
    }
  }
  return out;
}

Multivector interior(const Eigen::VectorXd& x, const Multivector& a) {
  if (x.size() != a.dim()) throw std::invalid_argument("dimension mismatch");
  Multivector out(a.dim());
  for (int m = 0; m < a.slots(); ++m) {
    if (a[m] == 0.0) continue;
    for (int i = 0; i < a.dim(); ++i) {
      Mask bit = 1u << i;
      if (!(m & bit) || x(i) == 0.0) continue;
      int before = popcount(m & (bit - 1));
      out.add(m & ~bit, ((before & 1) ? -1.0 : 1.0) * x(i) * a[m]);
    }
  }
  return out;
}

Multivector interior(const Multivector& x, const Multivector& a) {
  same_dim(x, a);
  if (!x.is_homogeneous(1, 0.0)) throw std::invalid_argument("interior: x must be a 1-vector");
  return interior(x.as_vector(), a);
}

Multivector hodge(const Multivector& a) {
  Multivector out(a.dim());
  const Mask full = static_cast<Mask>(a.slots() - 1);
  for (int m = 0; m < a.slots(); ++m) {
    if (a[m] == 0.0) continue;
    Mask c = full & ~static_cast<Mask>(m);
    out.add(c, reorder_sign(m, c) * a[m]);
  }
  return out;
}

double inner(const Multivector& a, const Multivector& b) {
  same_dim(a, b);
  double s = 0.0;
  for (int m = 0; m < a.slots(); ++m) s += a[m] * b[m];
  return s;
}

double max_diff(const Multivector& a, const Multivector& b) { return (a - b).max_abs(); }

bool approx_equal(const Multivector& a, const Multivector& b, double eps) {
  return max_diff(a, b) <= eps;
}

Multivector transform(const Multivector& a, const Eigen::MatrixXd& P) {
  const int n = a.dim();
  if (P.rows() != n || P.cols() != n) throw std::invalid_argument("transform: matrix size");
  std::vector<Multivector> image(a.slots(), Multivector(n));
  image[0] = Multivector::scalar(n, 1.0);
  for (int m = 1; m < a.slots(); ++m) {
    int low = std::countr_zero(static_cast<Mask>(m));
    image[m] = wedge(Multivector::vector(P.col(low)), image[m & (m - 1)]);
  }
  Multivector out(n);
  for (int m = 0; m < a.slots(); ++m)
    if (a[m] != 0.0) out += a[m] * image[m];
  return out;
}

Multivector in_frame(const Multivector& a, const Eigen::MatrixXd& F) {
  return transform(a, F.transpose());
}

std::string to_string(const Multivector& a, double eps) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.terms(eps)) {
    double c = t.c;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", std::abs(c));
    if (t.idx.empty()) {
      os << buf;
      continue;
    }
    if (std::abs(std::abs(c) - 1.0) > 1e-15) os << buf << "*";
    os << "e";
    for (int i : t.idx) os << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace nred
