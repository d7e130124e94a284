#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nred/catalog.hpp"
#include "nred/io.hpp"
#include "nred/report.hpp"
#include "test_util.hpp"

using namespace nred;

TEST_CASE("multivector reader") {
  json ok = json::parse(R"({"dim": 5, "terms": [{"idx": [1, 2, 5], "c": -1.0}, {"idx": [3, 4, 5], "c": -2}]})");
  Multivector T = multivector_from_json(ok);
  CHECK(T.component({1, 2, 5}) == -1.0);
  CHECK(T.component({3, 4, 5}) == -2.0);
  for (const char* bad : {R"({"dim": 5, "terms": [{"idx": [2, 1, 5], "c": 1}]})",
                          R"({"dim": 5, "terms": [{"idx": [1, 1, 5], "c": 1}]})",
                          R"({"dim": 5, "terms": [{"idx": [1, 2, 5], "c": 1}, {"idx": [1, 2, 5], "c": 1}]})",
                          R"({"dim": 5, "terms": [{"idx": [1, 2, 6], "c": 1}]})",
                          R"({"dim": 5, "terms": [{"idx": [1, 2, 5]}]})",
                          R"({"terms": []})", R"({"dim": 9, "terms": []})"}) {
    INFO(bad);
    CHECK_THROWS_AS(multivector_from_json(json::parse(bad)), ParseError);
  }
}

TEST_CASE("round trips") {
  std::mt19937_64 gen(1);
  for (int n = 3; n <= 6; ++n) {
    Multivector a = testutil::random_form(n, 3, gen);
    CHECK(max_diff(multivector_from_json(to_json(a)), a) < 1e-15);
    CurvatureOperator R = testutil::random_curvature(n, gen);
    CHECK((curvature_from_json(to_json(R), n).matrix() - R.matrix()).cwiseAbs().maxCoeff() < 1e-15);
  }
  for (const auto& e : catalog()) {
    CatalogModel cm = build_entry(e.name, {});
    if (cm.nomizu) {
      NomizuData d = nomizu_from_json(to_json(*cm.nomizu));
      CHECK(d.dim_V == cm.nomizu->dim_V);
      CHECK(d.h.size() == cm.nomizu->h.size());
      CHECK(max_diff(d.T, cm.T) < 1e-12);
    }
    if (cm.model) {
      HomogeneousModel M = homogeneous_from_json(to_json(*cm.model));
      CHECK(M.m_idx == cm.model->m_idx);
      CHECK(M.lambda.has_value() == cm.model->lambda.has_value());
      LieAlgebraData L = algebra_from_json(to_json(cm.model->algebra));
      for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j)
          for (int k = 0; k < L.dim(); ++k) CHECK(std::abs(L.c(i, j, k) - cm.model->algebra.c(i, j, k)) < 1e-12);
    }
  }
}

TEST_CASE("malformed model files") {
  CHECK_THROWS_AS(curvature_from_json(json::parse(R"({"basis": "other", "matrix": []})"), 3), ParseError);
  CHECK_THROWS_AS(curvature_from_json(json::parse(R"({"basis": "lex-eij", "matrix": [[1, 2], [3, 4]]})"), 3),
                  ParseError);
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"labels": ["a", "b"], "brackets": [{"i": 1, "j": 0, "k": 0, "c": 1}]})")),
                  ParseError);
}

TEST_CASE("reports are deterministic and carry run info") {
  RunInfo info{"catalog build stiefel", Tolerance{}, 7};
  CatalogModel cm = build_entry("stiefel", {});
  std::string a = envelope(info, catalog_json(cm)).dump(2), b = envelope(info, catalog_json(build_entry("stiefel", {}))).dump(2);
  CHECK(a == b);
  json j = json::parse(a);
  CHECK(j["version"] == kVersion);
  CHECK(j["seed"] == 7);
  CHECK(j["tolerance"]["eps_coeff"] == 1e-9);
  CHECK(j["result"]["computed"]["flags"]["einstein_g"] == true);
  CHECK(chop(1e-15) == 0.0);
  CHECK(!render_text(j).empty());
}

TEST_CASE("verify reports") {
  CatalogModel cm = build_entry("stiefel", {});
  VerifyReport r = verify_homogeneous(*cm.model);
  CHECK(r.all_pass());
  HomogeneousModel M = *cm.model;
  M.lambda.reset();
  VerifyReport s = verify_homogeneous(M);
  bool skipped = false;
  for (const auto& c : s.checks) skipped = skipped || (c.skipped && c.name == "parallel_T");
  CHECK(skipped);
  CHECK(verify_nomizu(*build_entry("b1", {}).nomizu).all_pass());
}
