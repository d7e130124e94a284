#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nred/multivector.hpp"
#include "nred/torsion.hpp"
#include "test_util.hpp"

using namespace nred;

namespace {

// k-fold wedge of 1-forms: components are k x k minors.
double minor_component(const std::vector<Eigen::VectorXd>& vs, const std::vector<int>& idx) {
  const int k = static_cast<int>(vs.size());
  Eigen::MatrixXd M(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) M(r, c) = vs[c](idx[r] - 1);
  return M.determinant();
}

}  // namespace

TEST_CASE("basis sign and component") {
  Multivector a = Multivector::basis(4, {2, 1, 3});
  CHECK(a.component({1, 2, 3}) == doctest::Approx(-1.0));
  CHECK(a.component({3, 1, 2}) == doctest::Approx(-1.0));
  CHECK(Multivector::basis(4, {1, 1, 3}).max_abs() == 0.0);
}

TEST_CASE("strict reader rejects bad index lists") {
  CHECK_THROWS(Multivector::from_terms(4, {{{2, 1}, 1.0}}));
  CHECK_THROWS(Multivector::from_terms(4, {{{1, 1}, 1.0}}));
  CHECK_THROWS(Multivector::from_terms(4, {{{1, 2}, 1.0}, {{1, 2}, 2.0}}));
  CHECK_THROWS(Multivector::from_terms(4, {{{1, 5}, 1.0}}));
  CHECK_NOTHROW(Multivector::from_terms(4, {{{1, 2, 4}, 1.0}}));
}

TEST_CASE("wedge of 1-forms equals minors") {
  std::mt19937_64 gen(11);
  for (int n = 3; n <= 6; ++n)
    for (int k = 2; k <= 3; ++k) {
      std::vector<Eigen::VectorXd> vs;
      Multivector w = Multivector::scalar(n, 1.0);
      for (int i = 0; i < k; ++i) {
        vs.push_back(testutil::random_vector(n, gen));
        w = wedge(w, Multivector::vector(vs.back()));
      }
      for (Mask m : masks_of_grade(n, k)) CHECK(w[m] == doctest::Approx(minor_component(vs, mask_indices(m))));
    }
}

TEST_CASE("wedge is graded commutative and associative") {
  std::mt19937_64 gen(3);
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      Multivector a = testutil::random_form(n, 1, gen), b = testutil::random_form(n, 2, gen),
                  c = testutil::random_form(n, 2, gen);
      CHECK(max_diff(wedge(a, b), wedge(b, a)) < 1e-12);
      CHECK(max_diff(wedge(a, a), Multivector(n)) < 1e-12);
      CHECK(max_diff(wedge(wedge(a, b), c), wedge(a, wedge(b, c))) < 1e-12);
    }
  }
}

TEST_CASE("interior product is an antiderivation") {
  std::mt19937_64 gen(5);
  for (int n = 3; n <= 6; ++n) {
    Eigen::VectorXd x = testutil::random_vector(n, gen);
    Multivector a = testutil::random_form(n, 2, gen), b = testutil::random_form(n, 1, gen);
    Multivector lhs = interior(x, wedge(a, b));
    Multivector rhs = wedge(interior(x, a), b) + wedge(a, interior(x, b));
    CHECK(max_diff(lhs, rhs) < 1e-12);
    CHECK(max_diff(interior(x, interior(x, a)), Multivector(n)) < 1e-12);
  }
}

TEST_CASE("hodge star") {
  std::mt19937_64 gen(8);
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      Multivector a = testutil::random_form(n, k, gen), b = testutil::random_form(n, k, gen);
      const double sgn = ((k * (n - k)) % 2) ? -1.0 : 1.0;
      CHECK(max_diff(hodge(hodge(a)), sgn * a) < 1e-12);
      // a ^ *b = <a,b> vol
      Multivector vol = Multivector::basis(n, [&] {
        std::vector<int> v;
        for (int i = 1; i <= n; ++i) v.push_back(i);
        return v;
      }());
      CHECK(max_diff(wedge(a, hodge(b)), inner(a, b) * vol) < 1e-10);
    }
  CHECK(max_diff(hodge(Multivector::basis(5, {1, 2, 5})), Multivector::basis(5, {3, 4})) < 1e-15);
}

TEST_CASE("transform by orthogonal maps preserves norms and in_frame inverts") {
  std::mt19937_64 gen(9);
  for (int n = 3; n <= 6; ++n) {
    Eigen::MatrixXd Q = Eigen::HouseholderQR<Eigen::MatrixXd>(Eigen::MatrixXd::Random(n, n)).householderQ();
    Multivector a = testutil::random_form(n, 3, gen);
    CHECK(transform(a, Q).norm() == doctest::Approx(a.norm()));
    CHECK(max_diff(in_frame(transform(a, Q), Q), a) < 1e-12);
  }
}

TEST_CASE("sigma_T: half-sum formula equals cyclic formula") {
  std::mt19937_64 gen(17);
  for (int n = 3; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      Multivector T = testutil::random_form(n, 3, gen);
      CHECK(max_diff(sigma_T(T), sigma_T_cyclic(T)) < 1e-12);
    }
}

TEST_CASE("sigma_T goldens") {
  for (double rho : {-2.0, 0.5, 1.0, 3.0})
    for (double lam : {-1.0, 0.25, 2.0}) {
      Multivector T = -(Multivector::basis(5, {1, 2, 5}, rho) + Multivector::basis(5, {3, 4, 5}, lam));
      CHECK(max_diff(sigma_T(T), Multivector::basis(5, {1, 2, 3, 4}, rho * lam)) < 1e-12);
    }
  CHECK(sigma_T(Multivector::basis(3, {1, 2, 3}, 2.0)).max_abs() == 0.0);
}
