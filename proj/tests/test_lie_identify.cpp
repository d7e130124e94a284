#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nred/catalog.hpp"
#include "nred/lie_identify.hpp"
#include "nred/linalg.hpp"
#include "nred/nomizu.hpp"

using namespace nred;

namespace {

LieAlgebraData from_table(int n, std::initializer_list<std::tuple<int, int, int, double>> t) {
  LieAlgebraData L(n);
  for (auto [i, j, k, c] : t) L.add_bracket(i, j, k, c);
  return L;
}

// [x,y] = z, [z,x] = k y, [y,z] = k x
LieAlgebraData three(double k) { return from_table(3, {{0, 1, 2, 1.0}, {2, 0, 1, k}, {1, 2, 0, k}}); }

LieAlgebraData direct_sum(const LieAlgebraData& A, const LieAlgebraData& B) {
  const int a = A.dim(), n = a + B.dim();
  LieAlgebraData L(n);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j)
      for (int k = 0; k < a; ++k)
        if (i < j && A.c(i, j, k) != 0) L.set_bracket(i, j, k, A.c(i, j, k));
  for (int i = 0; i < B.dim(); ++i)
    for (int j = 0; j < B.dim(); ++j)
      for (int k = 0; k < B.dim(); ++k)
        if (i < j && B.c(i, j, k) != 0) L.set_bracket(a + i, a + j, a + k, B.c(i, j, k));
  return L;
}

LieAlgebraData g1_of(const CatalogModel& cm) {
  LieAlgebraData L = build_lie_algebra(*cm.nomizu);
  std::vector<int> h;
  for (size_t i = 0; i < cm.nomizu->h.size(); ++i) h.push_back(static_cast<int>(i));
  return transversal_subalgebra(L, *cm.g1_candidate, h).algebra;
}

Eigen::MatrixXd random_invertible(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> N(0.0, 1.0);
  Eigen::MatrixXd P(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P(i, j) = N(gen);
  return P + 3.0 * Eigen::MatrixXd::Identity(n, n);
}

std::vector<std::pair<std::string, LieAlgebraData>> zoo() {
  LieAlgebraData heis3 = from_table(3, {{0, 1, 2, 1.0}});
  LieAlgebraData heis5 = from_table(5, {{0, 1, 4, 1.0}, {2, 3, 4, 1.0}});
  LieAlgebraData n6 = from_table(6, {{0, 1, 3, 1.0}, {0, 2, 4, 1.0}, {1, 2, 5, 1.0}});
  return {{"heis3", heis3},
          {"heis5", heis5},
          {"su(2)", three(1.0)},
          {"sl(2,R)", three(-1.0)},
          {"su(2)+su(2)", direct_sum(three(1.0), three(2.0))},
          {"su(2)+sl(2,R)", direct_sum(three(1.0), three(-1.0))},
          {"sl(2,R)+sl(2,R)", direct_sum(three(-1.0), three(-3.0))},
          {"heis3+heis3", direct_sum(heis3, heis3)},
          {"heis3+su(2)", direct_sum(heis3, three(1.0))},
          {"R^3 x su(2)", direct_sum(LieAlgebraData(3), three(1.0))},
          {"n6(0,0,0,12,13,23)", n6},
          {"u(2)", direct_sum(LieAlgebraData(1), three(1.0))},
          {"R^4", LieAlgebraData(4)}};
}

}  // namespace

TEST_CASE("named algebras") {
  for (const auto& [name, L] : zoo()) {
    INFO(name);
    REQUIRE(jacobi_check(L).passes);
    CHECK(identify(L) == name);
  }
}

TEST_CASE("identification is basis independent") {
  std::mt19937_64 gen(31);
  for (const auto& [name, L] : zoo())
    for (int trial = 0; trial < 3; ++trial) {
      INFO(name);
      LieAlgebraData C = L.change_basis(random_invertible(L.dim(), gen));
      CHECK(identify(C) == name);
      CHECK(fingerprint(C) == fingerprint(L));
    }
}

TEST_CASE("fingerprint invariants") {
  for (const auto& [name, L] : zoo()) {
    Fingerprint f = fingerprint(L);
    CHECK(f.killing.pos + f.killing.neg + f.killing.zero == f.dim);
    for (size_t i = 1; i < f.derived_dims.size(); ++i) CHECK(f.derived_dims[i] <= f.derived_dims[i - 1]);
  }
  CHECK(killing_form(from_table(3, {{0, 1, 2, 1.0}})).cwiseAbs().maxCoeff() == 0.0);
  Inertia su2 = inertia(killing_form(three(1.0)), 1e-7);
  CHECK(su2.neg == 3);
}

TEST_CASE("Killing form is ad-invariant") {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> N(0.0, 1.0);
  std::vector<LieAlgebraData> algs;
  for (const auto& [name, L] : zoo()) algs.push_back(L);
  for (const char* e : {"dim3", "b1", "dim6_b", "d2", "stiefel", "berger", "s3s3", "sl2c"}) {
    CatalogModel cm = build_entry(e, {});
    algs.push_back(build_lie_algebra(*cm.nomizu));
  }
  for (const auto& L : algs) {
    Eigen::MatrixXd K = killing_form(L);
    for (int t = 0; t < 5; ++t) {
      Eigen::VectorXd x(L.dim()), y(L.dim()), z(L.dim());
      for (int i = 0; i < L.dim(); ++i) {
        x(i) = N(gen);
        y(i) = N(gen);
        z(i) = N(gen);
      }
      const double v = L.bracket(x, y).dot(K * z) + y.dot(K * L.bracket(x, z));
      CHECK(std::abs(v) < 1e-8 * std::max(1.0, K.norm()));
    }
  }
}

TEST_CASE("dim-3 transversal algebra") {
  CHECK(identify(g1_of(dim3_model(1.0, 1.0))) == "heis3");
  CHECK(identify(g1_of(dim3_model(1.0, 0.0))) == "su(2)");
  CHECK(identify(g1_of(dim3_model(1.0, 2.0))) == "sl(2,R)");
}

TEST_CASE("D.2 Killing form and branches") {
  for (double alpha : {-1.0, 0.5, 3.0})
    for (double ap : {0.0, 0.4})
      for (double beta : {1.0, -0.7}) {
        if (alpha == beta) continue;
        CatalogModel cm = dim6_D2_model(alpha, ap, beta);
        LieAlgebraData g = g1_of(cm);
        Eigen::MatrixXd K = killing_form(g);
        CHECK((K - d2_killing_expected(alpha, ap, beta)).cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, K.norm()));
        const double det = K.determinant(), expect = d2_killing_det_expected(alpha, ap, beta);
        CHECK(std::abs(det - expect) <= 1e-8 * std::max(1.0, std::abs(expect)));
        CHECK(identify(g) == cm.expected.labels.at("g1"));
      }
  CHECK(identify(g1_of(dim6_D2_model(2.0, 0.0, 1.0))) == "n6(0,0,0,12,13,23)");
  CHECK(identify(g1_of(dim6_D2_model(2.0, 0.5, 1.0))) == "R^3 x su(2)");
  // 4 beta (alpha - 2 beta) = alpha'^2 with beta = 1, alpha = 3, alpha' = 2
  CHECK(identify(g1_of(dim6_D2_model(3.0, 2.0, 1.0))) == "R^3 x| su(2)");
}

TEST_CASE("ideal decomposition") {
  auto names = [](const std::vector<Ideal>& v) {
    std::vector<std::string> out;
    for (const auto& i : v) out.push_back(i.name);
    return out;
  };
  CHECK(names(ideal_decomposition(LieAlgebraData(6))) == std::vector<std::string>(6, "R^1"));
  std::mt19937_64 gen(2);
  LieAlgebraData s = direct_sum(three(1.0), three(-2.0)).change_basis(random_invertible(6, gen));
  auto ids = ideal_decomposition(s, 3);
  REQUIRE(ids.size() == 2);
  std::vector<std::string> n = names(ids);
  std::sort(n.begin(), n.end());
  CHECK(n == std::vector<std::string>{"sl(2,R)", "su(2)"});
  for (const auto& i : ids) {
    // each block is an ideal
    for (int b = 0; b < s.dim(); ++b) {
      Eigen::MatrixXd img = s.ad_basis(b) * i.basis;
      Eigen::MatrixXd Q = range_basis(i.basis, 1e-9);
      CHECK((img - Q * (Q.transpose() * img)).norm() < 1e-8);
    }
  }
  // B.1 with rho^2 = a and lambda^2 = c gives heis5
  CHECK(identify(g1_of(dim5_B1_model(1.0, 2.0, 1.0, 4.0))) == "heis5");
  // case B ideals follow the signs of a + b +- 2c - alpha^2 - beta^2
  for (double c : {-3.0, 0.5, 4.0}) {
    CatalogModel cm = dim6_caseB_model(1.0, 2.0, 1.0, c);
    auto parts = names(ideal_decomposition(g1_of(cm)));
    std::sort(parts.begin(), parts.end());
    std::string joined = parts.size() == 2 ? parts[0] + "," + parts[1] : "?";
    CHECK(joined == cm.expected.labels.at("g1_ideals"));
  }
}

TEST_CASE("center and bracket span") {
  LieAlgebraData h = from_table(3, {{0, 1, 2, 1.0}});
  CHECK(center(h).cols() == 1);
  CHECK(bracket_span(h, Eigen::MatrixXd::Identity(3, 3), Eigen::MatrixXd::Identity(3, 3)).cols() == 1);
  CHECK(center(three(1.0)).cols() == 0);
}
