#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nred/catalog.hpp"
#include "nred/clifford.hpp"
#include "nred/homogeneous.hpp"
#include "nred/nomizu.hpp"
#include "nred/torsion.hpp"

using namespace nred;

namespace {

double max_abs(const Eigen::MatrixXd& A) { return A.cwiseAbs().maxCoeff(); }

// Basis h1 h3 h5 e1..e6 at indices 0..8.
constexpr int h5 = 2, e1 = 3, e2 = 4, e3 = 5, e4 = 6, e5 = 7, e6 = 8;

}  // namespace

TEST_CASE("every entry builds with defaults and satisfies the shared contract") {
  for (const auto& e : catalog()) {
    INFO(e.name);
    CatalogModel cm = build_entry(e.name, {});
    CHECK(cm.entry == e.name);
    if (cm.expected.forms.count("T")) CHECK(max_diff(cm.T, cm.expected.forms.at("T")) < 1e-9);
    if (cm.expected.forms.count("sigma_T")) CHECK(max_diff(sigma_T(cm.T), cm.expected.forms.at("sigma_T")) < 1e-9);
    if (cm.expected.labels.count("case") && !cm.expected.labels.at("case").empty())
      CHECK(to_string(classify(cm.T).case_label) == cm.expected.labels.at("case"));
    if (!cm.nomizu) continue;
    CHECK(jacobi_check(build_lie_algebra(*cm.nomizu)).passes);
    CHECK(bianchi_clifford_check(cm.T, cm.R).is_scalar);
    CHECK(parallelism_check(*cm.model, cm.T).passes);
    CHECK(parallelism_check(*cm.model, cm.R).passes);
  }
}

TEST_CASE("registry") {
  CHECK_THROWS_AS(find_entry("nope"), UnknownEntry);
  CHECK_THROWS_AS(build_entry("b1", {{"zeta", 1.0}}), std::invalid_argument);
  CHECK(build_entry("b1", {{"rho", 3.0}}).params.at("b") == doctest::Approx(2 * 2.0 * 3.0));
}

TEST_CASE("constraints") {
  auto eq = [](auto f) {
    try {
      f();
    } catch (const ConstraintViolation& e) {
      return e.equation;
    }
    return std::string();
  };
  CHECK(eq([] { dim5_B1_model(1, 1, 0, 0); }) == "rho != lambda");
  CHECK(eq([] { dim5_B1_model(0, 1, 0, 0); }) == "rho*lambda != 0");
  CHECK(eq([] { sl2c_model(1.0, 1.0); }) == "alpha != 1");
  CHECK_FALSE(eq([] { s3s3_model(2, 2, 2, 2, 1); }).empty());
  CHECK_FALSE(eq([] { berger_model(-1); }).empty());
  CHECK_FALSE(eq([] { heisenberg_model({1, 2, 3}); }).empty());
  CHECK(dim5_B2_model(2.0, 0.0).params.at("b") == doctest::Approx(4.0));
  CHECK(dim6_caseB_model(1.0, 2.0, 1.0, 0.5).params.at("b") == doctest::Approx(1 - 1 + 4));
}

TEST_CASE("dim-5 goldens") {
  for (double a : {-1.0, 0.0, 0.7})
    for (double c : {0.0, 2.0}) {
      CatalogModel cm = dim5_B1_model(1.0, 2.0, a, c);
      Eigen::VectorXd d(5);
      d << -a, -a, -c, -c, 0;
      CHECK(max_abs(ricci(cm.R) - Eigen::MatrixXd(d.asDiagonal())) < 1e-12);
    }
  CHECK(dim5_B1_model(1, 2, 0, 0).expected.flags.at("ricci_flat"));
  // B.2 at the Berger parameters
  const double gamma = 0.6;
  CatalogModel b2 = dim5_B2_model(std::sqrt(3 / gamma), -1.0);
  CHECK(b2.params.at("b") == doctest::Approx(3 / gamma - 3));
  CatalogModel berger = berger_model(gamma);
  CHECK(max_abs(berger.R.matrix() - b2.R.matrix()) < 1e-9);
  CHECK(max_diff(berger.T, -1.0 * b2.T) < 1e-9);
}

TEST_CASE("dim-6 case B") {
  CatalogModel flat = dim6_caseB_model(1.0, 1.0, 0.0, 0.0);
  CHECK(flat.R.matrix().cwiseAbs().maxCoeff() == 0.0);
  CHECK(flat.expected.flags.at("flat"));
  CHECK(jacobi_check(build_lie_algebra(*flat.nomizu)).passes);
}

TEST_CASE("D.2 goldens") {
  for (double alpha : {-1.0, 0.5, 3.0})
    for (double beta : {1.0, 2.0}) {
      CatalogModel cm = dim6_D2_model(alpha, 0.3, beta);
      CHECK(max_abs(ricci(cm.R) + 2 * beta * (alpha - beta) * Eigen::MatrixXd::Identity(6, 6)) < 1e-9);
    }
  CatalogModel nk = dim6_D2_model(-1, 0, 1);
  CHECK(nk.expected.flags.at("nearly_kahler"));
  CHECK(hermitian_from_sigma(nk.T).pure_w1);
}

TEST_CASE("Stiefel parameters") {
  CatalogModel cm = stiefel_model(1.0, 4.0 / 3.0, 4.0 / 3.0);
  CHECK(cm.expected.flags.at("einstein_g"));
  CHECK(cm.expected.scalars.at("lambda_param") == doctest::Approx(4.0 / 3.0 / std::sqrt(2.0)));
  CHECK(cm.expected.scalars.at("rho_param") == doctest::Approx(-4.0 / 3.0 / std::sqrt(2.0)));
  ClassificationReport r = classify(cm.T);
  CHECK(r.skew_spectrum[0] == doctest::Approx(std::abs(cm.expected.scalars.at("lambda_param"))));
  CHECK_FALSE(stiefel_model(1.0, 1.0, 2.0).expected.flags.at("einstein_g"));
}

TEST_CASE("S3xS3 coefficients recomputed from brackets") {
  int points = 0;
  for (double a : {2.0, 3.0, -1.0, 0.5})
    for (double c : {0.5, 2.5})
      for (double d : {3.0, -2.0, 1.5}) {
        const double b = (points % 2) ? 1.0 : 1.8;
        const double lam = 0.5 + 0.25 * (points % 4);
        const double D = (a - 1) * (d - 1) - (b - 1) * (c - 1);
        if (points == 20 || std::abs(D) < 1e-3) continue;
        ++points;
        const LieAlgebraData& L = s3s3_model(a, b, c, d, lam).model->algebra;
        const S3S3Coefficients k = s3s3_coefficients(a, b, c, d, lam);
        INFO(a, " ", b, " ", c, " ", d, " ", lam);
        auto near = [](double x, double y) { return std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(y)); };
        CHECK(near(L.c(e1, e3, e5), k.mu));
        CHECK(near(L.c(e1, e3, e6), k.nu / lam));
        CHECK(near(L.c(e1, e3, h5), k.gamma));
        CHECK(near(L.c(e1, e4, e5), lam * k.delta));
        CHECK(near(L.c(e1, e4, e6), k.sigma));
        CHECK(near(L.c(e1, e4, h5), lam * k.tau));
        CHECK(near(L.c(e2, e4, e5), lam * lam * k.xi));
        CHECK(near(L.c(e2, e4, e6), lam * k.eta));
        CHECK(near(L.c(e2, e4, h5), lam * lam * k.theta));
        for (int t = 0; t < 9; ++t) CHECK(near(L.c(e2, e3, t), L.c(e1, e4, t)));
      }
  CHECK(points == 20);
}

TEST_CASE("S3xS3 special rows") {
  CHECK(s3s3_coefficients(2, 1, 1, 3, 1).Sigma == doctest::Approx(0.0));
  CHECK(s3s3_coefficients(2, 1, 3, 3, 0.7).Sigma == doctest::Approx(0.0));
  const double a = 2, d = 3, c = (d + 1) / 2;
  const double lam = 2 * std::abs(a - 1) / (std::sqrt(3.0) * std::abs(d - 1));
  CatalogModel nk = s3s3_model(a, 1, c, d, lam);
  CHECK(nk.expected.flags.at("nearly_kahler"));
  CHECK(hermitian_from_sigma(nk.T).pure_w1);
  CatalogModel other = s3s3_model(a, 1, c, d, 2 * lam);
  CHECK_FALSE(hermitian_from_sigma(other.T).pure_w1);
}

TEST_CASE("SL(2,C)") {
  for (double alpha : {0.5, -1.0, 2.0})
    for (double lambda : {0.5, 1.0, 3.0}) {
      CatalogModel cm = sl2c_model(alpha, lambda);
      const double q = lambda * (1 - alpha);
      CHECK(max_abs(cm.R.matrix() - cm.expected.curvatures.at("R").matrix()) < 1e-9);
      CHECK(cm.R.matrix()(0, 0) + cm.R.matrix()(0, 0) >= 0.0);
      CHECK(cm.expected.scalars.at("lambda_coefficient") == doctest::Approx(lambda * alpha - 1 / q));
    }
  // pure W3 iff lambda (1 - alpha) = +-1
  CatalogModel w3 = sl2c_model(0.5, 2.0);
  CHECK(w3.expected.flags.at("pure_w3"));
  CHECK(hermitian_from_sigma(w3.T).pure_w3);
  CatalogModel w3n = sl2c_model(3.0, 0.5);
  CHECK(hermitian_from_sigma(w3n.T).pure_w3);
  CHECK_FALSE(hermitian_from_sigma(sl2c_model(0.5, 1.0).T).pure_w3);
}

TEST_CASE("rank-4 family") {
  CatalogModel cm = build_entry("rank4", {});
  CHECK(classify(cm.T).star_sigma_rank == 4);
  CHECK(cm.expected.flags.at("kernel_contains_e5_e6"));
  Multivector s = hodge(sigma_T(cm.T));
  SkewEndo A = two_form_to_endo(s);
  CHECK(A.col(4).norm() < 1e-9);
  CHECK(A.col(5).norm() < 1e-9);
  CatalogModel zero = rank4_example_form(std::vector<double>(12, 0.0));
  CHECK(zero.T.max_abs() == 0.0);
  CatalogModel off = build_entry("rank4", {{"x", 1.0}});
  CHECK_FALSE(off.expected.flags.at("kernel_contains_e5_e6"));
}
