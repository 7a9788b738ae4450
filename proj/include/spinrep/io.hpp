#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spinrep/bilinears.hpp"
#include "spinrep/classmap.hpp"
#include "spinrep/clifford.hpp"
#include "spinrep/fierz.hpp"
#include "spinrep/lounesto.hpp"
#include "spinrep/spinor_forms.hpp"
#include "spinrep/topology.hpp"

namespace spinrep::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Malformed text or a document that does not match the expected shape.
// The message starts with the location (line/column or field path).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws SchemaError with "source:line:column: ..." on malformed JSON.
Json parse_text(std::string_view text, std::string_view source);

Json to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& where);

Json to_json(const spinor::Quaternion& q);
spinor::Quaternion quaternion_from_json(const Json& j, const std::string& where);

Json to_json(const spinor::SpinorOperator& op);
spinor::SpinorOperator operator_from_json(const Json& j, const std::string& where);

// {rep, components}
Json to_json(const spinor::ClassicalSpinor& psi);
spinor::ClassicalSpinor spinor_from_json(const Json& j, const std::string& where);

// {signature, coefficients: 16 [re, im] pairs}
Json to_json(const clifford::Multivector& m);
clifford::Multivector multivector_from_json(const Json& j, const std::string& where);

// {signature, sigma, omega, J, K, S} with S in the order 01, 02, 03, 12, 13, 23.
Json to_json(const bilinears::BilinearSet& b);
bilinears::BilinearSet bilinears_from_json(const Json& j, const std::string& where);

Json to_json(const lounesto::ClassificationReport& r);

// Residuals with the threshold they were judged against and pass/fail per identity.
Json to_json(const fierz::FpkResiduals& r, double tol, double scale);
Json to_json(const fierz::EuclideanFierzResiduals& r, double tol, double scale);

Json to_json(const classmap::MappingParams& p);
classmap::MappingParams params_from_json(const Json& j, const std::string& where);

// Either a bare list of [sigma, omega] pairs or {"points": [...]}.
Json to_json(const topology::PlanePath& path);
topology::PlanePath path_from_json(const Json& j, const std::string& where);
Json to_json(const topology::WindingReport& r);

struct SpinorEntry {
  std::string id;
  std::optional<spinor::ClassicalSpinor> spinor;
  std::optional<bilinears::BilinearSet> bilinears;
};

struct SpinorFile {
  int version = kFormatVersion;
  std::vector<SpinorEntry> entries;
};

// Each entry carries either {rep, components} or a "bilinears" object.
SpinorFile spinor_file_from_json(const Json& j);
Json to_json(const SpinorFile& file);

std::uint64_t fnv1a64(std::string_view bytes);
// 16 lowercase hex digits of the FNV-1a hash of the compact parameter JSON.
std::string params_hash(const classmap::MappingParams& p);

}  // namespace spinrep::io
