#include "nred/io.hpp"

#include <cmath>
#include <fstream>

#include "nred/skew.hpp"

namespace nred {

double chop(double x) { return std::abs(x) < kWriteChop ? 0.0 : x; }

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

json matrix_to_json(const Eigen::MatrixXd& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (int k = 0; k < M.cols(); ++k) r.push_back(chop(M(i, k)));
    rows.push_back(r);
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const int rows = static_cast<int>(j.size());
  if (rows == 0) return Eigen::MatrixXd(0, 0);
  if (!j[0].is_array()) throw ParseError("matrix must be an array of rows");
  const int cols = static_cast<int>(j[0].size());
  Eigen::MatrixXd M(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) throw ParseError("ragged matrix");
    for (int k = 0; k < cols; ++k) M(i, k) = number(j[i][k], "matrix entry");
  }
  return M;
}

json to_json(const Multivector& a) {
  json terms = json::array();
  for (int k = 0; k <= a.dim(); ++k)
    for (Mask m : masks_of_grade(a.dim(), k)) {
      double c = chop(a[m]);
      if (c != 0.0) terms.push_back({{"idx", mask_indices(m)}, {"c", c}});
    }
  return {{"dim", a.dim()}, {"terms", terms}};
}

Multivector multivector_from_json(const json& j) {
  const int dim = integer(field(j, "dim"), "dim");
  if (dim < 1 || dim > kMaxDim) throw ParseError("dim out of range");
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  std::vector<Term> out;
  for (const auto& t : terms) {
    const json& idx = field(t, "idx");
    if (!idx.is_array()) throw ParseError("idx must be an array");
    Term term;
    for (const auto& i : idx) term.idx.push_back(integer(i, "index"));
    term.c = number(field(t, "c"), "coefficient");
    out.push_back(std::move(term));
  }
  try {
    return Multivector::from_terms(dim, out);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json to_json(const CurvatureOperator& R) { return {{"basis", "lex-eij"}, {"matrix", matrix_to_json(R.matrix())}}; }

CurvatureOperator curvature_from_json(const json& j, int dim) {
  if (j.contains("basis") && j.at("basis") != "lex-eij") throw ParseError("curvature basis must be lex-eij");
  Eigen::MatrixXd M = matrix_from_json(field(j, "matrix"));
  const int N = dim * (dim - 1) / 2;
  if (M.rows() != N || M.cols() != N) throw ParseError("curvature matrix has the wrong size");
  return CurvatureOperator(dim, M);
}

json to_json(const NomizuData& d) {
  json h = json::array();
  for (const auto& A : d.h) h.push_back(to_json(endo_to_two_form(A)));
  json out = {{"dim_V", d.dim_V}, {"h", h}, {"T", to_json(d.T)}, {"R", to_json(d.R)}};
  if (!d.h_labels.empty()) out["h_labels"] = d.h_labels;
  return out;
}

NomizuData nomizu_from_json(const json& j) {
  NomizuData d;
  d.dim_V = integer(field(j, "dim_V"), "dim_V");
  if (d.dim_V < 1 || d.dim_V > kMaxDim) throw ParseError("dim_V out of range");
  const json& h = field(j, "h");
  if (!h.is_array()) throw ParseError("h must be an array");
  for (const auto& w : h) {
    Multivector f = multivector_from_json(w);
    if (f.dim() != d.dim_V || !f.is_homogeneous(2, 0.0)) throw ParseError("h entries must be 2-forms on V");
    d.h.push_back(two_form_to_endo(f));
  }
  if (j.contains("h_labels")) d.h_labels = j.at("h_labels").get<std::vector<std::string>>();
  d.T = multivector_from_json(field(j, "T"));
  if (d.T.dim() != d.dim_V) throw ParseError("T has the wrong dimension");
  if (!d.T.is_homogeneous(3, 0.0) && d.T.max_abs() != 0.0) throw ParseError("T must be a 3-form");
  d.R = curvature_from_json(field(j, "R"), d.dim_V);
  return d;
}

json to_json(const LieAlgebraData& L) {
  json br = json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int k = i + 1; k < L.dim(); ++k)
      for (int l = 0; l < L.dim(); ++l) {
        double c = chop(L.c(i, k, l));
        if (c != 0.0) br.push_back({{"i", i}, {"j", k}, {"k", l}, {"c", c}});
      }
  return {{"labels", L.labels()}, {"brackets", br}};
}

LieAlgebraData algebra_from_json(const json& j) {
  const json& labels = field(j, "labels");
  if (!labels.is_array()) throw ParseError("labels must be an array");
  std::vector<std::string> names;
  for (const auto& l : labels) {
    if (!l.is_string()) throw ParseError("labels must be strings");
    names.push_back(l.get<std::string>());
  }
  const int n = static_cast<int>(names.size());
  LieAlgebraData L(n, names);
  const json& br = field(j, "brackets");
  if (!br.is_array()) throw ParseError("brackets must be an array");
  for (const auto& b : br) {
    int i = integer(field(b, "i"), "i"), k = integer(field(b, "j"), "j"), l = integer(field(b, "k"), "k");
    if (i < 0 || k < 0 || l < 0 || i >= n || k >= n || l >= n) throw ParseError("bracket index out of range");
    if (i >= k) throw ParseError("brackets must be listed with i < j");
    L.add_bracket(i, k, l, number(field(b, "c"), "c"));
  }
  return L;
}

json to_json(const HomogeneousModel& M) {
  json out = {{"algebra", to_json(M.algebra)}, {"h", M.h_idx}, {"m", M.m_idx}, {"metric", matrix_to_json(M.metric)}};
  json iso = json::array();
  for (const auto& A : M.isotropy) iso.push_back(matrix_to_json(A));
  out["isotropy"] = iso;
  if (M.lambda) {
    json lam = json::array();
    for (const auto& A : *M.lambda) lam.push_back(matrix_to_json(A));
    out["lambda"] = lam;
  }
  return out;
}

HomogeneousModel homogeneous_from_json(const json& j) {
  LieAlgebraData L = algebra_from_json(field(j, "algebra"));
  std::vector<int> h = field(j, "h").get<std::vector<int>>();
  std::vector<int> m = field(j, "m").get<std::vector<int>>();
  std::vector<bool> seen(L.dim(), false);
  for (int i : h) {
    if (i < 0 || i >= L.dim() || seen[i]) throw ParseError("bad h index");
    seen[i] = true;
  }
  for (int i : m) {
    if (i < 0 || i >= L.dim() || seen[i]) throw ParseError("bad m index");
    seen[i] = true;
  }
  if (static_cast<int>(h.size() + m.size()) != L.dim()) throw ParseError("h and m must partition the basis");
  Eigen::MatrixXd g = matrix_from_json(field(j, "metric"));
  std::optional<std::vector<Eigen::MatrixXd>> lam;
  if (j.contains("lambda")) {
    lam.emplace();
    for (const auto& A : j.at("lambda")) lam->push_back(matrix_from_json(A));
  }
  HomogeneousModel M;
  try {
    M = make_model(std::move(L), h, m, g, lam);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (j.contains("isotropy")) {
    const json& iso = j.at("isotropy");
    if (!iso.is_array() || iso.size() != M.isotropy.size()) throw ParseError("isotropy size mismatch");
    for (std::size_t k = 0; k < iso.size(); ++k) {
      Eigen::MatrixXd A = matrix_from_json(iso[k]);
      if (A.rows() != M.m_dim() || A.cols() != M.m_dim() || (A - M.isotropy[k]).cwiseAbs().maxCoeff() > 1e-9)
        throw ParseError("isotropy matrices disagree with the brackets");
    }
  }
  for (const auto& A : M.lambda.value_or(std::vector<Eigen::MatrixXd>{}))
    if (A.rows() != M.m_dim() || A.cols() != M.m_dim()) throw ParseError("lambda matrix has the wrong size");
  return M;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace nred
