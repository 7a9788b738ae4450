#include "spinrep/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "spinrep/io.hpp"

namespace spinrep::cli {

namespace {

using io::Json;
using lounesto::LounestoClass;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double tol = lounesto::kDefaultTol;
  std::uint64_t seed = 0;
  std::string out;
  std::string rep = "weyl";
  std::string cls;
  int count = 1;
  std::string mode = "fpk";
  std::string params;
  bool hermitian = false;
  std::string input;
};

std::string number_text(double v) { return Json(v).dump(); }

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

Json load(const std::string& path, std::istream& in) {
  return io::parse_text(read_source(path, in), path == "-" ? "<stdin>" : path);
}

int emit(const Json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + out_path + "'");
  file << text;
  return kExitOk;
}

Json header(const std::string& command, const std::string& command_line, const Options& o, bool seeded) {
  Json h{{"version", io::kFormatVersion}, {"command", command}, {"command_line", command_line}, {"tol", o.tol}};
  h["seed"] = seeded ? Json(o.seed) : Json(nullptr);
  return h;
}

std::string tol_line(const std::string& command, const Options& o) {
  return "spinrep " + command + " --tol " + number_text(o.tol);
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  const auto file = io::spinor_file_from_json(load(o.input, in));
  Json report = header("classify", tol_line("classify", o), o, false);
  Json results = Json::array();
  for (const auto& e : file.entries) {
    Json r{{"id", e.id}};
    if (e.spinor && e.spinor->is_zero()) {
      r["error"] = "zero spinor";
    } else if (e.bilinears && e.bilinears->signature != clifford::Signature::Minkowski) {
      r["error"] = "classification needs Minkowski bilinears";
    } else {
      try {
        r.update(io::to_json(e.spinor ? lounesto::classify(*e.spinor, o.tol)
                                      : lounesto::classify_bilinears(*e.bilinears, o.tol)));
      } catch (const std::exception& ex) {
        r["error"] = ex.what();
      }
    }
    results.push_back(r);
  }
  report["results"] = results;
  return emit(report, o.out, out);
}

int cmd_generate(const Options& o, std::ostream& out) {
  const LounestoClass cls = lounesto::class_from_string(o.cls);
  const auto rep = clifford::gamma_tag_from_string(o.rep);
  io::SpinorFile file;
  const auto batch = lounesto::generate(cls, o.seed, o.count);
  for (std::size_t k = 0; k < batch.size(); ++k)
    file.entries.push_back({std::string(lounesto::to_string(cls)) + "-" + std::to_string(k),
                            spinor::to_representation(batch[k], rep), std::nullopt});
  Json doc = io::to_json(file);
  doc["generator"] = Json{{"command_line", "spinrep generate --class " + std::string(lounesto::to_string(cls)) +
                                               " --count " + std::to_string(o.count) +
                                               " --seed " + std::to_string(o.seed) + " --rep " + o.rep},
                          {"class", std::string(lounesto::to_string(cls))},
                          {"count", o.count},
                          {"seed", o.seed}};
  return emit(doc, o.out, out);
}

Json verify_entry(const io::SpinorEntry& e, const std::string& mode, double tol) {
  bilinears::BilinearSet b;
  double fpk_scale = 0.0;
  if (e.spinor) {
    if (e.spinor->is_zero()) throw std::invalid_argument("zero spinor");
    b = bilinears::bilinear_covariants(*e.spinor);
    fpk_scale = std::pow(e.spinor->components.squaredNorm(), 2);
  } else {
    b = *e.bilinears;
    fpk_scale = std::pow(b.max_abs(), 2);
  }
  if (mode == "fpk") {
    if (b.signature == clifford::Signature::Euclidean)
      return io::to_json(fierz::euclidean_fierz_residuals(b), tol, fpk_scale);
    return io::to_json(fierz::fpk_residuals(b), tol, fpk_scale);
  }
  if (b.signature != clifford::Signature::Minkowski)
    throw std::invalid_argument("mode " + mode + " needs Minkowski bilinears");
  const auto z = fierz::aggregate(b);
  const double z2 = std::pow(z.norm(), 2);
  if (mode == "aggregate") {
    const auto r = fierz::generalized_fpk_residuals(z, b);
    const double threshold = tol * z2;
    Json residuals = Json::object(), pass = Json::object();
    bool all = true;
    constexpr std::array<const char*, 5> names{"scalar", "vector", "bivector", "axial", "pseudoscalar"};
    for (std::size_t k = 0; k < names.size(); ++k) {
      residuals[names[k]] = r[k];
      pass[names[k]] = r[k] <= threshold;
      all = all && r[k] <= threshold;
    }
    return Json{{"residuals", residuals}, {"tol", tol},   {"scale", z2},
                {"threshold", threshold}, {"pass", pass}, {"passed", all}};
  }
  const double r = fierz::boomerang_residual(z, b.sigma);
  const double threshold = tol * z2;
  return Json{{"residuals", {{"boomerang", r}}},
              {"sigma", b.sigma},
              {"tol", tol},
              {"scale", z2},
              {"threshold", threshold},
              {"pass", {{"boomerang", r <= threshold}}},
              {"passed", r <= threshold}};
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const auto file = io::spinor_file_from_json(load(o.input, in));
  Json report = header("verify", tol_line("verify", o) + " --mode " + o.mode, o, false);
  report["mode"] = o.mode;
  Json results = Json::array();
  int failed = 0;
  for (const auto& e : file.entries) {
    Json r{{"id", e.id}};
    try {
      r.update(verify_entry(e, o.mode, o.tol));
      if (!r["passed"].get<bool>()) ++failed;
    } catch (const std::exception& ex) {
      r["error"] = ex.what();
      r["passed"] = false;
      ++failed;
    }
    results.push_back(r);
  }
  report["results"] = results;
  report["summary"] = Json{{"entries", file.entries.size()},
                           {"passed", static_cast<int>(file.entries.size()) - failed},
                           {"failed", failed}};
  emit(report, o.out, out);
  return failed == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_map4(const Options& o, std::istream& in, std::ostream& out) {
  const Json params_doc = load(o.params, in);
  const auto params = io::params_from_json(params_doc, "params");
  const auto m = o.hermitian ? classmap::hermitian_constrain(params) : classmap::build_M(params);
  const auto file = io::spinor_file_from_json(load(o.input, in));

  std::string line = tol_line("map4", o);
  if (o.hermitian) line += " --hermitian";
  Json report = header("map4", line, o, false);
  const Complex det = m.M.determinant();
  const auto cr = classmap::constraint_residuals(m.M);
  report["params_hash"] = io::params_hash(params);
  report["hermitian"] = o.hermitian;
  report["params"] = io::to_json(params);
  report["det"] = io::to_json(det);
  report["det_abs"] = std::abs(det);
  report["constraint_residuals"] = Json{{"gamma0", cr.gamma0}, {"gamma123", cr.gamma123}};

  std::array<int, 10> histogram{};
  int errors = 0;
  Json results = Json::array();
  for (const auto& e : file.entries) {
    Json r{{"id", e.id}};
    try {
      if (!e.spinor) throw std::invalid_argument("map4 needs spinor components");
      if (e.spinor->is_zero()) throw std::invalid_argument("zero spinor");
      const auto phi = spinor::to_representation(*e.spinor, clifford::GammaTag::Weyl);
      const auto image = classmap::map_to_class4(m, phi, o.tol);
      r["image"] = io::to_json(image.psi);
      r.update(io::to_json(image.report));
      r["degenerate"] = image.degenerate;
      ++histogram[static_cast<std::size_t>(image.report.cls)];
    } catch (const std::exception& ex) {
      r["error"] = ex.what();
      ++errors;
    }
    results.push_back(r);
  }
  report["results"] = results;
  Json hist = Json::object();
  for (std::size_t k = 0; k < histogram.size(); ++k)
    if (histogram[k] > 0) hist[std::string(lounesto::to_string(static_cast<LounestoClass>(k)))] = histogram[k];
  if (errors > 0) hist["error"] = errors;
  report["histogram"] = hist;
  return emit(report, o.out, out);
}

int cmd_winding(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto path = io::path_from_json(load(o.input, in), "path");
  topology::WindingReport w;
  try {
    w = topology::winding_number(path);
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitVerificationFailure;
  }
  out << w.winding << "\n";
  if (!o.out.empty() && o.out != "-") {
    Json report = header("winding", "spinrep winding", o, false);
    report.erase("tol");
    report.update(io::to_json(w));
    report["points"] = path.points.size();
    emit(report, o.out, out);
  }
  return kExitOk;
}

int cmd_reconstruct(const Options& o, std::istream& in, std::ostream& out) {
  const auto file = io::spinor_file_from_json(load(o.input, in));
  const auto rep = clifford::gamma_tag_from_string(o.rep);
  Json report = header("reconstruct", tol_line("reconstruct", o) + " --rep " + o.rep, o, false);
  Json results = Json::array();
  int failed = 0;
  for (const auto& e : file.entries) {
    Json r{{"id", e.id}};
    try {
      bilinears::BilinearSet b;
      if (e.spinor) {
        if (e.spinor->is_zero()) throw std::invalid_argument("zero spinor");
        b = bilinears::bilinear_covariants(*e.spinor);
      } else {
        b = *e.bilinears;
        if (b.signature != clifford::Signature::Minkowski)
          throw std::invalid_argument("reconstruction needs Minkowski bilinears");
      }
      const auto z = fierz::aggregate(b);
      const auto rec = e.spinor ? fierz::reconstruct(z, e.spinor->rep, *e.spinor) : fierz::reconstruct(z, rep);
      const auto back = fierz::aggregate(bilinears::bilinear_covariants(rec.psi));
      const double agg = (back - z).max_norm();
      const double agg_threshold = o.tol * z.norm();
      bool passed = agg <= agg_threshold;
      r["kernel"] = io::to_json(rec.kernel);
      r["spinor"] = io::to_json(rec.psi);
      r["aggregate_residual"] = agg;
      if (e.spinor) {
        const double sine = fierz::ray_sine(e.spinor->components, rec.psi.components);
        const double err = (rec.psi.components - e.spinor->components).cwiseAbs().maxCoeff() / e.spinor->norm();
        r["ray_sine"] = sine;
        r["relative_error"] = err;
        passed = passed && sine <= o.tol;
      }
      r["passed"] = passed;
      if (!passed) ++failed;
    } catch (const std::exception& ex) {
      r["error"] = ex.what();
      r["passed"] = false;
      ++failed;
    }
    results.push_back(r);
  }
  report["results"] = results;
  emit(report, o.out, out);
  return failed == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spinor representation toolkit", "spinrep"};
  app.require_subcommand(1);
  Options o;

  auto add_tol = [&o](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Relative zero threshold")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto add_out = [&o](CLI::App* sub) { sub->add_option("--out", o.out, "Write the report here instead of stdout"); };
  auto add_rep = [&o](CLI::App* sub) {
    sub->add_option("--rep", o.rep, "Gamma representation")
        ->check(CLI::IsMember({"weyl", "dirac"}))
        ->capture_default_str();
  };
  auto add_input = [&o](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, what)->required();
  };

  auto* classify = app.add_subcommand("classify", "Lounesto class of every entry");
  add_input(classify, "Spinor file, - for stdin");
  add_tol(classify);
  add_out(classify);

  auto* generate = app.add_subcommand("generate", "Seeded representatives of a class");
  generate->add_option("--class", o.cls, "Class 1..6")->required();
  generate->add_option("--count", o.count, "Number of spinors")->check(CLI::PositiveNumber)->capture_default_str();
  generate->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  add_rep(generate);
  add_out(generate);

  auto* verify = app.add_subcommand("verify", "Check the Fierz identities");
  add_input(verify, "Spinor file, - for stdin");
  verify->add_option("--mode", o.mode, "fpk, aggregate or boomerang")
      ->check(CLI::IsMember({"fpk", "aggregate", "boomerang"}))
      ->capture_default_str();
  add_tol(verify);
  add_out(verify);

  auto* map4 = app.add_subcommand("map4", "Send regular spinors through the class-4 mapping matrix");
  map4->add_option("--params", o.params, "Mapping parameter file")->required();
  add_input(map4, "Spinor file, - for stdin");
  map4->add_flag("--hermitian", o.hermitian, "Require the Hermitian relations");
  add_tol(map4);
  add_out(map4);

  auto* winding = app.add_subcommand("winding", "Winding number of a closed (sigma, omega) path");
  add_input(winding, "Path file, - for stdin");
  winding->add_option("--out", o.out, "Also write a JSON report here");

  auto* reconstruct = app.add_subcommand("reconstruct", "Recover spinors from their Fierz aggregates");
  add_input(reconstruct, "Spinor file, - for stdin");
  add_tol(reconstruct);
  add_rep(reconstruct);
  add_out(reconstruct);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(o, in, out);
    if (*generate) return cmd_generate(o, out);
    if (*verify) return cmd_verify(o, in, out);
    if (*map4) return cmd_map4(o, in, out);
    if (*winding) return cmd_winding(o, in, out, err);
    if (*reconstruct) return cmd_reconstruct(o, in, out);
  } catch (const io::SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spinrep::cli
