#include "nred/report.hpp"

#include <cmath>
#include <sstream>

#include "nred/clifford.hpp"
#include "nred/lie_algebra.hpp"
#include "nred/lie_identify.hpp"

namespace nred {

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.informational && !c.skipped && !c.passes) return false;
  return true;
}

namespace {

CheckLine line(std::string name, double residual, double eps) {
  return {std::move(name), residual <= eps, residual, false, false, ""};
}

}  // namespace

VerifyReport verify_nomizu(const NomizuData& d, const Tolerance& tol) {
  VerifyReport r;
  r.kind = "nomizu";
  NomizuDiagnostics diag = check_nomizu(d);
  r.checks.push_back(line("h_closure", diag.h_closure, tol.eps_coeff));
  r.checks.push_back(line("t_invariance", diag.t_invariance, tol.eps_coeff));
  r.checks.push_back(line("r_image", diag.r_image, tol.eps_coeff));
  r.checks.push_back(line("r_equivariance", diag.r_equivariance, tol.eps_coeff));
  r.checks.push_back(line("r_symmetry", diag.r_symmetry, tol.eps_coeff));
  if (diag.failure(tol).empty()) {
    LieAlgebraData L = build_lie_algebra(d, tol);
    JacobiResult jr = jacobi_check(L, tol.eps_coeff);
    r.checks.push_back({"jacobi", jr.passes, jr.max_residual, false, false, ""});
  } else {
    r.checks.push_back({"jacobi", false, 0.0, false, true, "Nomizu preconditions fail"});
  }
  CheckResult b1 = bianchi1_check(d.T, d.R, tol);
  r.checks.push_back({"bianchi1", b1.passes, b1.residual, false, false, ""});
  CheckResult b2 = bianchi2_check(d.T, d.R, tol);
  r.checks.push_back({"bianchi2", b2.passes, b2.residual, false, false, ""});
  CliffordBianchi cb = bianchi_clifford_check(d.T, d.R, tol);
  r.checks.push_back({"clifford_scalar", cb.is_scalar, cb.max_residual, false, false, ""});
  return r;
}

VerifyReport verify_homogeneous(const HomogeneousModel& M, const Tolerance& tol) {
  VerifyReport r;
  r.kind = "homogeneous";
  ReductiveCheck rc = check_reductive(M);
  r.checks.push_back(line("h_subalgebra", rc.h_subalgebra, tol.eps_coeff));
  r.checks.push_back(line("h_m_in_m", rc.hm_in_m, tol.eps_coeff));
  r.checks.push_back(line("isotropy_skew", rc.isotropy_skew, tol.eps_coeff));
  JacobiResult jr = jacobi_check(M.algebra, tol.eps_coeff);
  r.checks.push_back({"jacobi", jr.passes, jr.max_residual, false, false, ""});
  CheckResult nr = naturally_reductive_check(M, tol);
  r.checks.push_back({"naturally_reductive_literal", nr.passes, nr.residual, true, false,
                      "ad-condition on m in this presentation; informational"});
  if (!M.lambda) {
    for (const char* name : {"lambda_skew", "torsion_skew", "curvature_symmetry", "parallel_T", "parallel_R",
                             "clifford_scalar"})
      r.checks.push_back({name, false, 0.0, false, true, "model has no connection map"});
    return r;
  }
  r.checks.push_back(line("lambda_skew", rc.lambda_skew, tol.eps_coeff));
  TorsionResult tr = invariant_torsion(M);
  r.checks.push_back(line("torsion_skew", tr.non_skew_residual, tol.eps_coeff));
  CurvatureResult cr = invariant_curvature(M);
  r.checks.push_back(line("curvature_symmetry", cr.symmetry_residual, tol.eps_coeff));
  CheckResult pt = parallelism_check(M, tr.T, tol);
  r.checks.push_back({"parallel_T", pt.passes, pt.residual, false, false, ""});
  CheckResult pr = parallelism_check(M, cr.R, tol);
  r.checks.push_back({"parallel_R", pr.passes, pr.residual, false, false, ""});
  if (cr.symmetry_residual <= tol.eps_coeff) {
    CliffordBianchi cb = bianchi_clifford_check(tr.T, cr.R, tol);
    r.checks.push_back({"clifford_scalar", cb.is_scalar, cb.max_residual, false, false, ""});
  } else {
    r.checks.push_back({"clifford_scalar", false, 0.0, false, true, "curvature operator not symmetric"});
  }
  return r;
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e = {{"name", c.name}, {"passes", c.passes}, {"residual", chop(c.residual)}};
    if (c.informational) e["informational"] = true;
    if (c.skipped) e["skipped"] = true;
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(e);
  }
  return {{"kind", r.kind}, {"checks", checks}, {"all_pass", r.all_pass()}};
}

json to_json(const ClassificationReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = chop(v);
  json out = {{"dim", r.dim},
              {"case", to_string(r.case_label)},
              {"sigma_T", to_json(r.sigma_T)},
              {"spectrum_source", r.spectrum_source},
              {"star_sigma_rank", r.star_sigma_rank},
              {"ker_T_dim", r.ker_T_dim},
              {"iso_T_dim", r.iso_T_dim},
              {"g_T_dim", r.g_T_dim},
              {"parameters", params},
              {"flags", r.flags},
              {"adapted_frame", matrix_to_json(r.adapted_frame)},
              {"advisories", r.advisories}};
  json spec = json::array();
  for (double s : r.skew_spectrum) spec.push_back(chop(s));
  out["skew_spectrum"] = spec;
  if (r.distinguished_vector) out["distinguished_vector"] = matrix_to_json(*r.distinguished_vector);
  return out;
}

json bianchi_json(const Multivector& T, const CurvatureOperator& R, const Tolerance& tol) {
  CheckResult b1 = bianchi1_check(T, R, tol);
  CheckResult b2 = bianchi2_check(T, R, tol);
  CliffordBianchi cb = bianchi_clifford_check(T, R, tol);
  json out = {{"bianchi1", {{"passes", b1.passes}, {"residual", chop(b1.residual)}}},
              {"bianchi2", {{"passes", b2.passes}, {"residual", chop(b2.residual)}}},
              {"clifford", {{"is_scalar", cb.is_scalar}, {"max_residual", chop(cb.max_residual)}}}};
  out["agree"] = b1.passes == cb.is_scalar;
  return out;
}

json catalog_json(const CatalogModel& cm, const Tolerance& tol) {
  json out;
  out["entry"] = cm.entry;
  json params = json::object();
  for (const auto& [k, v] : cm.params) params[k] = v;
  out["params"] = params;
  out["T"] = to_json(cm.T);
  if (cm.nomizu) out["nomizu"] = to_json(*cm.nomizu);
  if (cm.model) out["homogeneous"] = to_json(*cm.model);
  out["notes"] = cm.notes;

  json ex = json::object();
  for (const auto& [k, v] : cm.expected.forms) ex["forms"][k] = to_json(v);
  for (const auto& [k, v] : cm.expected.curvatures) ex["curvatures"][k] = to_json(v);
  for (const auto& [k, v] : cm.expected.matrices) ex["matrices"][k] = matrix_to_json(v);
  for (const auto& [k, v] : cm.expected.scalars) ex["scalars"][k] = chop(v);
  for (const auto& [k, v] : cm.expected.flags) ex["flags"][k] = v;
  for (const auto& [k, v] : cm.expected.labels) ex["labels"][k] = v;
  out["expected"] = ex;

  json comp = json::object();
  const int n = cm.T.dim();
  if (n >= 3 && n <= 6 && cm.T.max_abs() > tol.eps_coeff) {
    ClassificationReport rep = classify(cm.T, tol);
    comp["classification"] = to_json(rep);
    if (n == 5 && rep.case_label != CaseLabel::D5_A) {
      ContactData c = contact_structure_dim5(cm.T, tol);
      comp["flags"]["quasi_sasaki"] = c.quasi_sasaki;
      comp["flags"]["alpha_sasaki"] = c.alpha_sasaki;
      comp["flags"]["sasaki"] = c.sasaki;
    }
    if (n == 6 && rep.star_sigma_rank == 6) {
      HermitianData h = hermitian_from_sigma(cm.T, tol);
      comp["flags"]["pure_w1"] = h.pure_w1;
      comp["flags"]["pure_w3"] = h.pure_w3;
      comp["flags"]["w4_vanishes"] = h.w4_vanishes;
    }
  }
  if (cm.nomizu) {
    Eigen::MatrixXd ric = ricci(cm.R);
    comp["ricci"] = matrix_to_json(ric);
    comp["flags"]["ricci_flat"] = ric.cwiseAbs().maxCoeff() <= 1e-8;
    comp["bianchi"] = bianchi_json(cm.T, cm.R, tol);
    comp["h_dim"] = cm.nomizu->h.size();
  }
  if (cm.model && cm.model->lambda) {
    Eigen::MatrixXd ricg = ricci_riemannian(*cm.model);
    EinsteinResult er = einstein_check(ricg);
    comp["ricci_g"] = matrix_to_json(ricg);
    comp["flags"]["einstein_g"] = er.is_einstein;
    comp["einstein_g_lambda"] = chop(er.lambda);
  }
  out["computed"] = comp;
  return out;
}

json catalog_list_json() {
  json arr = json::array();
  for (const auto& e : catalog()) {
    json params = json::array();
    for (const auto& p : e.params)
      params.push_back({{"name", p.name}, {"default", p.default_value}, {"constraint", p.description}});
    arr.push_back({{"name", e.name}, {"summary", e.summary}, {"params", params}});
  }
  return arr;
}

json envelope(const RunInfo& info, json result) {
  return {{"tool", "nred"},
          {"version", kVersion},
          {"command", info.command},
          {"tolerance", {{"eps_coeff", info.tol.eps_coeff}, {"eps_rank", info.tol.eps_rank}}},
          {"seed", info.seed},
          {"result", std::move(result)}};
}

namespace {

bool is_flat_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void render(const json& j, const std::string& indent, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      if (v.is_primitive() || is_flat_array(v)) {
        os << indent << it.key() << ": " << v.dump() << "\n";
      } else {
        os << indent << it.key() << ":\n";
        render(v, indent + "  ", os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || is_flat_array(v)) {
        os << indent << "- " << v.dump() << "\n";
      } else {
        os << indent << "-\n";
        render(v, indent + "  ", os);
      }
    }
  } else {
    os << indent << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream os;
  render(j, "", os);
  return os.str();
}

}  // namespace nred
