#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mockq/catalog.hpp"
#include "mockq/iseries.hpp"
#include "mockq/qlaurent.hpp"
#include "mockq/selfcheck.hpp"
#include "mockq/symfactor.hpp"

namespace mockq {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input; the message names the offending field.
class SchemaError : public UsageError {
 public:
  using UsageError::UsageError;
};

Json parse_json_text(const std::string& text, const std::string& what);

// Constants: {"order": N, "coords": ["p/q", ...]}. A plain string in the
// text form ("1/2 + z") is accepted on input as well.
Json cyclo_to_json(const CycloNum& c);
CycloNum cyclo_from_json(const Json& j, int field_order, const std::string& path);

// Series: {"trunc": T, "coeffs": [[exp, "coeff"], ...]} sorted by exponent.
Json series_to_json(const QSeries& s);
QSeries series_from_json(const Json& j, int field_order = CycloNum::kDefaultOrder);

struct ModelFile {
  ChargeModel model;
  PrefixConvention convention = PrefixConvention::PropLiteral;
};

Json model_to_json(const ChargeModel& model, PrefixConvention conv);
ModelFile model_from_json(const Json& j);

/// {"field_order": N, "series_power": d, "symbols": {name: {"c": .., "e": ..}}, "novikov": {name: ..}}
Json specialization_to_json(const Specialization& spec, const ChargeModel& model);
Specialization specialization_from_json(const Json& j, const ChargeModel& model);

/// {"symbols": [...], "degree": [...], "prefix": monomial, "factors": [{"mono": monomial, "power": k}]}
/// with monomial = {"coeff": "p/q", "q_exp": j, "syms": {name: exponent}}.
Json term_to_json(const DegreeTerm& term, const SymbolTable& symbols);
DegreeTerm term_from_json(const Json& j, const SymbolTable& symbols);

Json report_to_json(const VerifyReport& report);
Json listing_to_json(const std::vector<IdentityListing>& listing);
Json suites_to_json(const std::vector<SuiteResult>& suites);

}  // namespace mockq
