#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nred/catalog.hpp"
#include "nred/io.hpp"
#include "nred/report.hpp"
#include "nred/torsion.hpp"

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kParse = 2, kDim = 3, kUnknown = 4, kConstraint = 5 };

struct Options {
  double tolerance = nred::Tolerance{}.eps_coeff;
  double rank_tolerance = nred::Tolerance{}.eps_rank;
  unsigned seed = 0;
  std::string format = "json";
  std::string output;
};

int emit(const Options& opt, const nred::RunInfo& info, nred::json result) {
  nred::json doc = nred::envelope(info, std::move(result));
  std::string text = opt.format == "text" ? nred::render_text(doc) : doc.dump(2) + "\n";
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.output);
    if (!out) {
      std::cerr << "cannot write " << opt.output << "\n";
      return kParse;
    }
    out << text;
  }
  return kOk;
}

// Catalog output and report envelopes are accepted wherever a model is expected.
const nred::json& unwrap(const nred::json& j) {
  if (j.is_object() && j.contains("result") && j.contains("tool")) return j.at("result");
  return j;
}

int run_classify(const std::string& path, const Options& opt, const nred::RunInfo& info) {
  nred::json j = unwrap(nred::read_json_file(path));
  nred::Multivector T = nred::multivector_from_json(j.contains("T") ? j.at("T") : j);
  if (!T.is_homogeneous(3, 0.0)) throw nred::ParseError("input is not a 3-form");
  return emit(opt, info, nred::to_json(nred::classify(T, info.tol)));
}

int run_verify(const std::string& path, const Options& opt, const nred::RunInfo& info) {
  const nred::json j = unwrap(nred::read_json_file(path));
  nred::json result = nred::json::object();
  bool ok = true;
  bool any = false;
  if (j.contains("dim_V") || j.contains("nomizu")) {
    nred::NomizuData d = nred::nomizu_from_json(j.contains("nomizu") ? j.at("nomizu") : j);
    nred::VerifyReport r = nred::verify_nomizu(d, info.tol);
    result["nomizu"] = nred::to_json(r);
    ok = ok && r.all_pass();
    any = true;
  }
  if (j.contains("algebra") || j.contains("homogeneous")) {
    nred::HomogeneousModel M = nred::homogeneous_from_json(j.contains("homogeneous") ? j.at("homogeneous") : j);
    nred::VerifyReport r = nred::verify_homogeneous(M, info.tol);
    result["homogeneous"] = nred::to_json(r);
    ok = ok && r.all_pass();
    any = true;
  }
  if (!any) throw nred::ParseError("input is neither a Nomizu model nor a homogeneous model");
  result["all_pass"] = ok;
  int code = emit(opt, info, result);
  return code != kOk ? code : (ok ? kOk : kChecksFailed);
}

int run_bianchi(const std::string& path, const Options& opt, const nred::RunInfo& info) {
  nred::json j = unwrap(nred::read_json_file(path));
  if (j.contains("nomizu")) j = j.at("nomizu");
  nred::Multivector T = nred::multivector_from_json(j.at("T"));
  if (!T.is_homogeneous(3, 0.0) && T.max_abs() != 0.0) throw nred::ParseError("T is not a 3-form");
  nred::CurvatureOperator R = nred::curvature_from_json(j.at("R"), T.dim());
  return emit(opt, info, nred::bianchi_json(T, R, info.tol));
}

nred::Params parse_params(const std::vector<std::string>& kv) {
  nred::Params p;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw nred::ParseError("parameter must be key=value: " + s);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s.substr(eq + 1), &used);
    } catch (const std::exception&) {
      throw nred::ParseError("not a number: " + s);
    }
    if (used != s.size() - eq - 1) throw nred::ParseError("not a number: " + s);
    p[s.substr(0, eq)] = v;
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Naturally reductive spaces in dimension <= 6"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tolerance", opt.tolerance, "coefficient tolerance")->check(CLI::PositiveNumber);
  app.add_option("--rank-tolerance", opt.rank_tolerance, "rank tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for randomized steps");
  app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", opt.output, "output path");

  std::string path;
  auto* classify = app.add_subcommand("classify", "classify a 3-form");
  classify->add_option("file", path, "multivector JSON")->required();
  auto* verify = app.add_subcommand("verify", "check a Nomizu or homogeneous model");
  verify->add_option("file", path, "model JSON")->required();
  auto* bianchi = app.add_subcommand("bianchi", "Bianchi checks for (T, R)");
  bianchi->add_option("file", path, "model JSON with T and R")->required();
  auto* cat = app.add_subcommand("catalog", "catalog of explicit families");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "list entries");
  std::string name;
  std::vector<std::string> kv;
  auto* build = cat->add_subcommand("build", "build an entry");
  build->add_option("name", name, "entry name")->required();
  build->add_option("--param", kv, "key=value")->expected(0, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  nred::RunInfo info;
  info.tol.eps_coeff = opt.tolerance;
  info.tol.eps_rank = opt.rank_tolerance;
  info.seed = opt.seed;
  try {
    info.tol.validate();
    if (*classify) {
      info.command = "classify";
      return run_classify(path, opt, info);
    }
    if (*verify) {
      info.command = "verify";
      return run_verify(path, opt, info);
    }
    if (*bianchi) {
      info.command = "bianchi";
      return run_bianchi(path, opt, info);
    }
    if (*list) {
      info.command = "catalog list";
      return emit(opt, info, nred::catalog_list_json());
    }
    if (*build) {
      info.command = "catalog build " + name;
      nred::CatalogModel cm = nred::build_entry(name, parse_params(kv), info.tol);
      return emit(opt, info, nred::catalog_json(cm, info.tol));
    }
  } catch (const nred::UnsupportedDimension& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDim;
  } catch (const nred::UnknownEntry& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknown;
  } catch (const nred::ConstraintViolation& e) {
    std::cerr << "error: constraint violated: " << e.equation << "\n";
    return kConstraint;
  } catch (const nred::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const nred::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
