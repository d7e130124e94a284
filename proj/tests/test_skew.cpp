#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nred/linalg.hpp"
#include "nred/skew.hpp"
#include "nred/torsion.hpp"
#include "test_util.hpp"

using namespace nred;

namespace {

double max_abs(const Eigen::MatrixXd& A) { return A.cwiseAbs().maxCoeff(); }

// Derivation action evaluated pointwise on basis tuples.
double brute_action(const Eigen::MatrixXd& A, const Multivector& a, const std::vector<int>& idx) {
  double s = 0.0;
  const int n = a.dim();
  for (size_t p = 0; p < idx.size(); ++p)
    for (int m = 1; m <= n; ++m) {
      std::vector<int> j = idx;
      j[p] = m;
      s -= A(m - 1, idx[p] - 1) * a.component(j);
    }
  return s;
}

}  // namespace

TEST_CASE("two-form / endomorphism dictionary") {
  SkewEndo E12 = two_form_to_endo(Multivector::basis(3, {1, 2}));
  Eigen::Vector3d e1(1, 0, 0);
  CHECK((E12 * e1 - Eigen::Vector3d(0, 1, 0)).norm() < 1e-15);
  CHECK(max_abs(E12 - elementary(3, 1, 2)) == 0.0);

  SkewEndo B = two_form_to_endo(Multivector::basis(4, {1, 2}) + Multivector::basis(4, {3, 4}));
  Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(4, 4);
  expect(1, 0) = 1;
  expect(0, 1) = -1;
  expect(3, 2) = 1;
  expect(2, 3) = -1;
  CHECK(max_abs(B - expect) == 0.0);

  std::mt19937_64 gen(1);
  for (int n = 3; n <= 6; ++n) {
    Multivector w = testutil::random_form(n, 2, gen);
    SkewEndo A = two_form_to_endo(w);
    CHECK(max_abs(A + A.transpose()) < 1e-15);
    CHECK(max_diff(endo_to_two_form(A), w) < 1e-14);
    CHECK(so_inner(A, A) == doctest::Approx(inner(w, w)));
  }
  CHECK_THROWS(two_form_to_endo(Multivector::basis(3, {1, 2, 3})));
  CHECK_THROWS(endo_to_two_form(Eigen::MatrixXd::Identity(3, 3)));
}

TEST_CASE("act_on_form matches pointwise definition") {
  std::mt19937_64 gen(2);
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= 3; ++k) {
      Eigen::MatrixXd A = testutil::random_skew(n, gen);
      Multivector a = testutil::random_form(n, k, gen);
      Multivector b = act_on_form(A, a);
      for (Mask m : masks_of_grade(n, k)) CHECK(b[m] == doctest::Approx(brute_action(A, a, mask_indices(m))));
    }
  CHECK(act_on_form(elementary(3, 1, 2), Multivector::basis(3, {1, 2})).max_abs() < 1e-15);
  CHECK(act_on_form(elementary(3, 1, 3), Multivector::basis(3, {1, 2, 3})).max_abs() < 1e-15);
}

TEST_CASE("act_on_form is a derivation and a representation") {
  std::mt19937_64 gen(3);
  for (int n = 3; n <= 6; ++n) {
    Eigen::MatrixXd A = testutil::random_skew(n, gen), B = testutil::random_skew(n, gen);
    Multivector a = testutil::random_form(n, 1, gen), b = testutil::random_form(n, 2, gen);
    CHECK(max_diff(act_on_form(A, wedge(a, b)), wedge(act_on_form(A, a), b) + wedge(a, act_on_form(A, b))) < 1e-12);
    Multivector T = testutil::random_form(n, 3, gen);
    Multivector lhs = act_on_form(A, act_on_form(B, T)) - act_on_form(B, act_on_form(A, T));
    CHECK(max_diff(lhs, act_on_form(commutator(A, B), T)) < 1e-11);
  }
}

TEST_CASE("(X _| T) acting on T is sigma_T with X in the last slot") {
  std::mt19937_64 gen(4);
  for (int n = 3; n <= 6; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      Multivector T = testutil::random_form(n, 3, gen);
      Eigen::VectorXd x = testutil::random_vector(n, gen);
      Multivector lhs = act_on_form(two_form_to_endo(interior(x, T)), T);
      // sigma_T(Y1,Y2,Y3,X) = -(X _| sigma_T)(Y1,Y2,Y3)
      CHECK(max_diff(lhs, -1.0 * interior(x, sigma_T(T))) < 1e-11);
    }
  const double rho = 1.0, lam = 2.0;
  Multivector T = -(Multivector::basis(5, {1, 2, 5}, rho) + Multivector::basis(5, {3, 4, 5}, lam));
  Eigen::VectorXd e5 = Eigen::VectorXd::Unit(5, 4);
  CHECK(act_on_form(two_form_to_endo(interior(e5, T)), T).max_abs() < 1e-14);
}

TEST_CASE("lie closure") {
  CHECK(lie_closure(3, {elementary(3, 2, 3), elementary(3, 1, 3), elementary(3, 1, 2)}).size() == 3);
  CHECK(lie_closure(3, {elementary(3, 1, 2)}).size() == 1);
  SubalgebraBasis L = lie_closure(4, {elementary(4, 1, 3) + elementary(4, 2, 4), elementary(4, 1, 4) - elementary(4, 2, 3)});
  CHECK(L.size() == 3);
  CHECK(L.closure_residual() < 1e-12);
  for (int i = 0; i < L.size(); ++i)
    for (int j = 0; j < L.size(); ++j) CHECK(so_inner(L.gens[i], L.gens[j]) == doctest::Approx(i == j ? 1.0 : 0.0));
}

TEST_CASE("g_T and isotropy algebra") {
  CHECK(g_T(Multivector::basis(3, {1, 2, 3})).size() == 3);
  CHECK(g_T(Multivector(5)).size() == 0);
  Multivector T6 = Multivector::basis(6, {1, 2, 3}) + Multivector::basis(6, {4, 5, 6});
  SubalgebraBasis g6 = g_T(T6);
  CHECK(g6.size() == 6);
  auto blocks = invariant_subspaces(g6, 7);
  REQUIRE(blocks.size() == 2);
  for (const auto& B : blocks) {
    CHECK(B.cols() == 3);
    // each block lies in span(e1..e3) or span(e4..e6)
    const double top = B.topRows(3).norm(), bottom = B.bottomRows(3).norm();
    CHECK(std::min(top, bottom) < 1e-10);
  }

  for (double lam : {2.0, 1.0}) {
    Multivector T = -(Multivector::basis(5, {1, 2, 5}) + Multivector::basis(5, {3, 4, 5}, lam));
    SubalgebraBasis iso = isotropy_algebra(T);
    CHECK(iso.size() == (lam == 1.0 ? 4 : 2));
    CHECK(iso.closure_residual() < 1e-10);
    for (const auto& A : iso.gens) CHECK(act_on_form(A, T).max_abs() < 1e-10);
  }
  CHECK(isotropy_algebra(Multivector::basis(3, {1, 2, 3})).size() == 3);
}

TEST_CASE("g_T lies in iso(T) when sigma_T vanishes") {
  std::mt19937_64 gen(8);
  // T = e123 + e456 plus a rotation of the frame
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::MatrixXd Q = random_orthogonal(6, 100 + trial);
    Multivector T = transform(Multivector::basis(6, {1, 2, 3}, 1.3) + Multivector::basis(6, {4, 5, 6}, -0.4), Q);
    REQUIRE(sigma_T(T).max_abs() < 1e-12);
    SubalgebraBasis g = g_T(T), iso = isotropy_algebra(T);
    Eigen::MatrixXd G = g.coordinates(), I = iso.coordinates();
    Eigen::MatrixXd proj = G - I * (I.transpose() * G);
    CHECK(proj.cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("invariant subspaces form an orthogonal invariant decomposition") {
  auto s1 = invariant_subspaces(3, {elementary(3, 1, 2)}, 1);
  REQUIRE(s1.size() == 2);
  CHECK(((s1[0].cols() == 2 && s1[1].cols() == 1) || (s1[0].cols() == 1 && s1[1].cols() == 2)));
  CHECK(invariant_subspaces(3, {elementary(3, 1, 2), elementary(3, 1, 3), elementary(3, 2, 3)}, 1).size() == 1);

  std::mt19937_64 gen(12);
  for (int n = 4; n <= 6; ++n) {
    Eigen::MatrixXd Q = random_orthogonal(n, 30 + n);
    std::vector<SkewEndo> gens = {Q * elementary(n, 1, 2) * Q.transpose(), Q * elementary(n, 3, 4) * Q.transpose()};
    auto subs = invariant_subspaces(n, gens, 9);
    int total = 0;
    for (size_t i = 0; i < subs.size(); ++i) {
      total += static_cast<int>(subs[i].cols());
      for (const auto& A : gens) {
        Eigen::MatrixXd img = A * subs[i];
        CHECK((img - subs[i] * (subs[i].transpose() * img)).norm() < 1e-9);
      }
      for (size_t j = i + 1; j < subs.size(); ++j) CHECK((subs[i].transpose() * subs[j]).norm() < 1e-9);
    }
    CHECK(total == n);
    CHECK(subs.size() == static_cast<size_t>(2 + (n - 4)));
  }
}
