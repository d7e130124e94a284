#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "nred/curvature.hpp"
#include "nred/homogeneous.hpp"
#include "nred/lie_algebra.hpp"
#include "nred/multivector.hpp"
#include "nred/nomizu.hpp"

namespace nred {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Values below this magnitude are written as 0.
inline constexpr double kWriteChop = 1e-13;
double chop(double x);

json matrix_to_json(const Eigen::MatrixXd& M);
Eigen::MatrixXd matrix_from_json(const json& j);

// {"dim": n, "terms": [{"idx": [i, j, k], "c": x}, ...]}
json to_json(const Multivector& a);
Multivector multivector_from_json(const json& j);

// {"basis": "lex-eij", "matrix": [[...]]}
json to_json(const CurvatureOperator& R);
CurvatureOperator curvature_from_json(const json& j, int dim);

// {"dim_V": n, "h": [2-forms], "T": multivector, "R": curvature}
json to_json(const NomizuData& d);
NomizuData nomizu_from_json(const json& j);

// {"labels": [...], "brackets": [{"i":, "j":, "k":, "c":}]} with i < j, 0-based.
json to_json(const LieAlgebraData& L);
LieAlgebraData algebra_from_json(const json& j);

json to_json(const HomogeneousModel& M);
HomogeneousModel homogeneous_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace nred
