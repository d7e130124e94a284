#pragma once

#include <string>
#include <vector>

#include "nred/catalog.hpp"
#include "nred/homogeneous.hpp"
#include "nred/io.hpp"
#include "nred/nomizu.hpp"
#include "nred/tolerance.hpp"
#include "nred/torsion.hpp"

namespace nred {

inline constexpr const char* kVersion = "0.3.1";

struct RunInfo {
  std::string command;
  Tolerance tol;
  unsigned seed = 0;
};

struct CheckLine {
  std::string name;
  bool passes = false;
  double residual = 0.0;
  bool informational = false;  // reported but does not gate the result
  bool skipped = false;
  std::string note;
};

struct VerifyReport {
  std::string kind;  // "nomizu" or "homogeneous"
  std::vector<CheckLine> checks;
  bool all_pass() const;
};

VerifyReport verify_nomizu(const NomizuData& d, const Tolerance& tol = {});
VerifyReport verify_homogeneous(const HomogeneousModel& M, const Tolerance& tol = {});

json to_json(const VerifyReport& r);
json to_json(const ClassificationReport& r);
json bianchi_json(const Multivector& T, const CurvatureOperator& R, const Tolerance& tol = {});
// Model, expected values and values recomputed from the model.
json catalog_json(const CatalogModel& cm, const Tolerance& tol = {});
json catalog_list_json();

// Wraps a result with version, tolerances, seed and command.
json envelope(const RunInfo& info, json result);
std::string render_text(const json& j);

}  // namespace nred
