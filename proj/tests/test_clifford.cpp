#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nred/catalog.hpp"
#include "nred/clifford.hpp"
#include "nred/nomizu.hpp"
#include "nred/torsion.hpp"
#include "test_util.hpp"

using namespace nred;

namespace {

// Monomial product by explicit index shuffling: concatenate, bubble sort, cancel pairs.
std::pair<double, Mask> brute_monomial(Mask a, Mask b) {
  std::vector<int> w = mask_indices(a);
  for (int i : mask_indices(b)) w.push_back(i);
  double s = 1.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        s = -s;
        changed = true;
      } else if (w[i] == w[i + 1]) {
        s = -s;  // e_i e_i = -1
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  Mask m = 0;
  for (int i : w) m |= 1u << (i - 1);
  return {s, m};
}

// 1/4 sum R_ijkl e_i e_j e_k e_l over all index tuples.
CliffordElement brute_curvature(const CurvatureOperator& R) {
  const int n = R.dim();
  CliffordElement out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = R.value(i, j, k, l);
          if (v == 0.0) continue;
          CliffordElement mono = CliffordElement::scalar(n, 1.0);
          for (int idx : {i, j, k, l}) {
            CliffordElement e(n);
            e.add(1u << idx, 1.0);
            mono = cl_mul(mono, e);
          }
          out += (0.25 * v) * mono;
        }
  return out;
}

}  // namespace

TEST_CASE("basic products") {
  CliffordElement e1(3), e2(3);
  e1.add(0b001, 1.0);
  e2.add(0b010, 1.0);
  CHECK(cl_mul(e1, e1)[0] == doctest::Approx(-1.0));
  CHECK(cl_mul(e1, e2)[0b011] == doctest::Approx(1.0));
  CHECK(cl_mul(e2, e1)[0b011] == doctest::Approx(-1.0));
  for (int n = 3; n <= 6; ++n) {
    CliffordElement v = embed_form(Multivector::basis(n, {1, 2, 3}));
    CliffordElement sq = cl_mul(v, v);
    CHECK(sq[0] == doctest::Approx(1.0));
    CHECK(sq.max_nonscalar() < 1e-15);
  }
}

TEST_CASE("clifford_sign agrees with brute-force shuffling") {
  for (int n = 3; n <= 6; ++n)
    for (Mask a = 0; a < (1u << n); ++a)
      for (Mask b = 0; b < (1u << n); ++b) {
        auto [s, m] = brute_monomial(a, b);
        REQUIRE(m == (a ^ b));
        CHECK(clifford_sign(a, b) == static_cast<int>(s));
      }
}

TEST_CASE("product is associative") {
  std::mt19937_64 gen(21);
  std::normal_distribution<double> N(0.0, 1.0);
  for (int n = 3; n <= 6; ++n) {
    CliffordElement a(n), b(n), c(n);
    for (Mask m = 0; m < (1u << n); ++m) {
      a.add(m, N(gen));
      b.add(m, N(gen));
      c.add(m, N(gen));
    }
    CHECK((cl_mul(cl_mul(a, b), c) - cl_mul(a, cl_mul(b, c))).max_abs() < 1e-10);
  }
}

TEST_CASE("T^2 = -2 sigma_T + |T|^2") {
  std::mt19937_64 gen(4);
  for (int n = 3; n <= 6; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      Multivector T = testutil::random_form(n, 3, gen);
      CliffordElement sq = cl_mul(embed_form(T), embed_form(T));
      CliffordElement rhs = -2.0 * embed_form(sigma_T(T)) + CliffordElement::scalar(n, inner(T, T));
      CHECK((sq - rhs).max_abs() < 1e-9);
    }
}

TEST_CASE("Omega^2 = -|Omega|^2 + Omega ^ Omega") {
  std::mt19937_64 gen(6);
  for (int n = 3; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      Multivector w = testutil::random_form(n, 2, gen);
      CliffordElement sq = cl_mul(embed_form(w), embed_form(w));
      CliffordElement rhs = embed_form(wedge(w, w)) + CliffordElement::scalar(n, -inner(w, w));
      CHECK((sq - rhs).max_abs() < 1e-9);
    }
}

TEST_CASE("grade parts of the dim-5 square") {
  const double rho = 1.5, lam = 0.5;
  Multivector T = -(Multivector::basis(5, {1, 2, 5}, rho) + Multivector::basis(5, {3, 4, 5}, lam));
  CliffordElement sq = cl_mul(embed_form(T), embed_form(T));
  CHECK(grade_part(sq, 0)[0] == doctest::Approx(rho * rho + lam * lam));
  CHECK(max_diff(grade_part(sq, 4), Multivector::basis(5, {1, 2, 3, 4}, -2 * rho * lam)) < 1e-12);
  CHECK(grade_part(CliffordElement::scalar(4, 1.0), 0)[0] == doctest::Approx(1.0));
  CHECK_THROWS(grade_part(sq, 7));
}

TEST_CASE("embed_curvature matches direct expansion") {
  std::mt19937_64 gen(13);
  for (int n = 3; n <= 6; ++n) {
    CurvatureOperator R = testutil::random_curvature(n, gen);
    CHECK((embed_curvature(R) - brute_curvature(R)).max_abs() < 1e-10);
  }
  CurvatureOperator R3 = 2.0 * CurvatureOperator::sym(Multivector::basis(4, {1, 2}), Multivector::basis(4, {1, 2}));
  CliffordElement E = embed_curvature(R3);
  CHECK(E[0] == doctest::Approx(brute_curvature(R3)[0]));
  CHECK(grade_part(E, 4).max_abs() == 0.0);
  CHECK(embed_curvature(CurvatureOperator(4)).max_abs() == 0.0);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(6, 6);
  bad(0, 1) = 1.0;
  CHECK_THROWS(embed_curvature(CurvatureOperator(4, bad)));
}

TEST_CASE("B.1 scalar criterion and residual") {
  const double rho = 1.0, lam = 2.0;
  Multivector T = -(Multivector::basis(5, {1, 2, 5}, rho) + Multivector::basis(5, {3, 4, 5}, lam));
  Multivector O1 = Multivector::basis(5, {1, 2}), O2 = Multivector::basis(5, {3, 4});
  auto R_of = [&](double b) { return b * CurvatureOperator::sym(O1, O2); };
  CHECK(bianchi_clifford_check(T, R_of(4.0)).is_scalar);
  CliffordBianchi off = bianchi_clifford_check(T, R_of(0.0));
  CHECK_FALSE(off.is_scalar);
  CHECK(off.residual[0b1111] == doctest::Approx(-4.0));
}

TEST_CASE("B.2 scalar criterion") {
  CatalogModel cm = dim5_B2_model(1.3, -0.7);
  CHECK(bianchi_clifford_check(cm.T, cm.R).is_scalar);
}
