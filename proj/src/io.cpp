#include "spinrep/io.hpp"

#include <cmath>
#include <cstdio>

namespace spinrep::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw SchemaError(where + ": " + what); }

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string field(const std::string& where, std::string_view name) {
  return where.empty() ? std::string(name) : where + "." + std::string(name);
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "number is not finite");
  return v;
}

const Json& member(const Json& j, std::string_view name, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(name);
  if (it == j.end()) fail(where, "missing field '" + std::string(name) + "'");
  return *it;
}

std::string string_member(const Json& j, std::string_view name, const std::string& where) {
  const Json& v = member(j, name, where);
  if (!v.is_string()) fail(field(where, name), "expected a string");
  return v.get<std::string>();
}

template <std::size_t N>
std::array<double, N> reals(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != N) fail(where, "expected an array of " + std::to_string(N) + " numbers");
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = number(j[i], at(where, i));
  return out;
}

template <std::size_t N>
Json reals_json(const std::array<double, N>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(v);
  return out;
}

clifford::Signature signature_of(const Json& j, const std::string& where) {
  const auto it = j.find("signature");
  if (it == j.end()) return clifford::Signature::Minkowski;
  if (!it->is_string()) fail(field(where, "signature"), "expected a string");
  try {
    return clifford::signature_from_string(it->get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(field(where, "signature"), e.what());
  }
}

Json residual_report(std::initializer_list<std::pair<const char*, double>> values, double tol, double scale) {
  const double threshold = tol * scale;
  Json residuals = Json::object(), pass = Json::object();
  bool all = true;
  for (const auto& [name, value] : values) {
    residuals[name] = value;
    const bool ok = std::abs(value) <= threshold;
    pass[name] = ok;
    all = all && ok;
  }
  return Json{{"residuals", residuals}, {"tol", tol}, {"scale", scale}, {"threshold", threshold},
              {"pass", pass}, {"passed", all}};
}

}  // namespace

Json parse_text(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    // nlohmann prefixes "[json.exception.parse_error.101] parse error at line L, column C: "
    if (const auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw SchemaError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) +
                      ": malformed JSON: " + what);
  } catch (const Json::out_of_range&) {
    throw SchemaError(std::string(source) + ": number out of range");
  }
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected a [re, im] pair");
  return {number(j[0], at(where, 0)), number(j[1], at(where, 1))};
}

Json to_json(const spinor::Quaternion& q) { return reals_json(spinor::components(q)); }

spinor::Quaternion quaternion_from_json(const Json& j, const std::string& where) {
  const auto c = reals<4>(j, where);
  return spinor::make_quaternion(c[0], c[1], c[2], c[3]);
}

Json to_json(const spinor::SpinorOperator& op) { return Json{{"q1", to_json(op.q1)}, {"q2", to_json(op.q2)}}; }

spinor::SpinorOperator operator_from_json(const Json& j, const std::string& where) {
  return {quaternion_from_json(member(j, "q1", where), field(where, "q1")),
          quaternion_from_json(member(j, "q2", where), field(where, "q2"))};
}

Json to_json(const spinor::ClassicalSpinor& psi) {
  Json comps = Json::array();
  for (int a = 0; a < 4; ++a) comps.push_back(to_json(psi.components(a)));
  return Json{{"rep", std::string(clifford::to_string(psi.rep))}, {"components", comps}};
}

spinor::ClassicalSpinor spinor_from_json(const Json& j, const std::string& where) {
  spinor::ClassicalSpinor psi;
  const std::string rep = string_member(j, "rep", where);
  try {
    psi.rep = clifford::gamma_tag_from_string(rep);
  } catch (const std::invalid_argument&) {
    fail(field(where, "rep"), "expected \"weyl\" or \"dirac\", got \"" + rep + "\"");
  }
  const Json& comps = member(j, "components", where);
  const std::string cw = field(where, "components");
  if (!comps.is_array() || comps.size() != 4) fail(cw, "expected 4 [re, im] pairs");
  for (std::size_t a = 0; a < 4; ++a) psi.components(static_cast<Eigen::Index>(a)) = complex_from_json(comps[a], at(cw, a));
  return psi;
}

Json to_json(const clifford::Multivector& m) {
  Json coeffs = Json::array();
  for (const Complex& c : m.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"signature", std::string(clifford::to_string(m.signature()))}, {"coefficients", coeffs}};
}

clifford::Multivector multivector_from_json(const Json& j, const std::string& where) {
  const std::string sig_name = string_member(j, "signature", where);
  clifford::Signature sig;
  try {
    sig = clifford::signature_from_string(sig_name);
  } catch (const std::invalid_argument& e) {
    fail(field(where, "signature"), e.what());
  }
  const Json& coeffs = member(j, "coefficients", where);
  const std::string cw = field(where, "coefficients");
  if (!coeffs.is_array() || coeffs.size() != clifford::kBladeCount)
    fail(cw, "expected " + std::to_string(clifford::kBladeCount) + " [re, im] pairs");
  clifford::Multivector m(sig);
  for (std::size_t k = 0; k < clifford::kBladeCount; ++k) m[k] = complex_from_json(coeffs[k], at(cw, k));
  return m;
}

Json to_json(const bilinears::BilinearSet& b) {
  return Json{{"signature", std::string(clifford::to_string(b.signature))},
              {"sigma", b.sigma},
              {"omega", b.omega},
              {"J", reals_json(b.J)},
              {"K", reals_json(b.K)},
              {"S", reals_json(b.S)}};
}

bilinears::BilinearSet bilinears_from_json(const Json& j, const std::string& where) {
  bilinears::BilinearSet b;
  if (!j.is_object()) fail(where, "expected an object");
  b.signature = signature_of(j, where);
  b.sigma = number(member(j, "sigma", where), field(where, "sigma"));
  b.omega = number(member(j, "omega", where), field(where, "omega"));
  b.J = reals<4>(member(j, "J", where), field(where, "J"));
  b.K = reals<4>(member(j, "K", where), field(where, "K"));
  b.S = reals<6>(member(j, "S", where), field(where, "S"));
  return b;
}

Json to_json(const lounesto::ClassificationReport& r) {
  const auto& b = r.bilinears;
  return Json{{"class", std::string(lounesto::to_string(r.cls))},
              {"sigma", b.sigma},
              {"omega", b.omega},
              {"J", reals_json(b.J)},
              {"K", reals_json(b.K)},
              {"S", reals_json(b.S)},
              {"zero_flags",
               {{"sigma", r.zero.sigma}, {"omega", r.zero.omega}, {"J", r.zero.J}, {"K", r.zero.K}, {"S", r.zero.S}}},
              {"tol", r.tol},
              {"margin", r.margin}};
}

Json to_json(const fierz::FpkResiduals& r, double tol, double scale) {
  return residual_report({{"r1", r.r1}, {"r2", r.r2}, {"r3", r.r3}, {"r4", r.r4}}, tol, scale);
}

Json to_json(const fierz::EuclideanFierzResiduals& r, double tol, double scale) {
  return residual_report({{"r1", r.r1}, {"r2", r.r2}, {"r3", r.r3}, {"r4", r.r4}}, tol, scale);
}

Json to_json(const classmap::MappingParams& p) {
  Json out = Json::object();
  const auto values = classmap::to_array(p);
  for (std::size_t k = 0; k < values.size(); ++k) out[classmap::kParamNames[k]] = to_json(values[k]);
  return out;
}

classmap::MappingParams params_from_json(const Json& j, const std::string& where) {
  std::array<Complex, 9> values{};
  for (std::size_t k = 0; k < values.size(); ++k)
    values[k] = complex_from_json(member(j, classmap::kParamNames[k], where), field(where, classmap::kParamNames[k]));
  return classmap::from_array(values);
}

Json to_json(const topology::PlanePath& path) {
  Json points = Json::array();
  for (const auto& p : path.points) points.push_back(reals_json(p));
  return Json{{"points", points}};
}

topology::PlanePath path_from_json(const Json& j, const std::string& where) {
  const Json* points = &j;
  std::string pw = where;
  if (j.is_object()) {
    points = &member(j, "points", where);
    pw = field(where, "points");
  }
  if (!points->is_array()) fail(pw, "expected a list of [sigma, omega] pairs");
  topology::PlanePath path;
  for (std::size_t k = 0; k < points->size(); ++k) path.points.push_back(reals<2>((*points)[k], at(pw, k)));
  return path;
}

Json to_json(const topology::WindingReport& r) {
  return Json{{"winding", r.winding}, {"raw_turns", r.raw_turns}, {"residue", r.residue}};
}

SpinorFile spinor_file_from_json(const Json& j) {
  SpinorFile file;
  const Json& version = member(j, "version", "file");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    fail("version", "expected " + std::to_string(kFormatVersion));
  const Json& entries = member(j, "entries", "file");
  if (!entries.is_array()) fail("entries", "expected a list");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = at("entries", i);
    const Json& e = entries[i];
    SpinorEntry entry;
    entry.id = string_member(e, "id", where);
    if (e.contains("bilinears")) {
      if (e.contains("components")) fail(where, "give either components or bilinears, not both");
      entry.bilinears = bilinears_from_json(e["bilinears"], field(where, "bilinears"));
    } else {
      entry.spinor = spinor_from_json(e, where);
    }
    file.entries.push_back(std::move(entry));
  }
  return file;
}

Json to_json(const SpinorFile& file) {
  Json entries = Json::array();
  for (const auto& e : file.entries) {
    Json out{{"id", e.id}};
    if (e.spinor) out.update(to_json(*e.spinor));
    if (e.bilinears) out["bilinears"] = to_json(*e.bilinears);
    entries.push_back(out);
  }
  return Json{{"version", file.version}, {"entries", entries}};
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string params_hash(const classmap::MappingParams& p) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(to_json(p).dump())));
  return buf;
}

}  // namespace spinrep::io
