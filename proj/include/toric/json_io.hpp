#pragma once

// JSON encodings of fans, polytopes, divisors, systems, reports and certificates.
// Parsers throw InputError with a JSON-pointer-like path to the offending field.

#include <json.hpp>
#include <optional>
#include <string>

#include "toric/degeneration.hpp"
#include "toric/fan_analysis.hpp"

namespace toric::io {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text, const std::string& what);
Json read_file(const std::string& path);

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j, const std::string& path);
long long_from_json(const Json& j, const std::string& path);
std::vector<long> longs_from_json(const Json& j, const std::string& path);
Json vector_to_json(const LatticeVector& v);
Json rational_to_json(const Rational& x);
Json rational_vector_to_json(const RationalVector& v);
Json matrix_to_json(const IntegerMatrix& m);

/// {"rank", "rays", "max_cones"} with 0-based cone indices
Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j, const std::string& path = "fan");

/// {"normals", "offsets"}: <m, normal> <= offset
Json polytope_to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const Json& j, const std::string& path = "polytope");

/// Either {"coeffs": [...]} over the fan's rays or {"standard": [...]}.
struct DivisorSpec {
  std::optional<std::vector<Integer>> coeffs;
  std::optional<std::vector<Integer>> standard;
};
DivisorSpec divisor_from_json(const Json& j, const std::string& path = "divisor");

/// {"fan", "divisor", "multiplicities"} or {"polytope", "multiplicities"}.
struct SystemSpec {
  std::optional<Fan> fan;
  std::optional<DivisorSpec> divisor;
  std::optional<LatticePolytope> polytope;
  std::vector<long> multiplicities;
};
SystemSpec system_from_json(const Json& j, const std::string& path = "system");

Json validation_to_json(const ValidationReport& r);
Json verdict_to_json(const TransitivityVerdict& v);
Json root_to_json(const DemazureRoot& r);
Json capsule_to_json(const CapsuleResult& c);

Json config_to_json(const RankConfig& c);
Json report_to_json(const SpecialityReport& r);
SpecialityReport report_from_json(const Json& j, const std::string& path = "report");

Json transcript_to_json(const HypothesisTranscript& t);
HypothesisTranscript transcript_from_json(const Json& j, const std::string& path);
Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j, const std::string& path = "certificate");

}  // namespace toric::io
