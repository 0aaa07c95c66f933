#include "mockq/json_io.hpp"

#include <cmath>

namespace mockq {

namespace {

const Json& require(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key + ": missing field");
  return *it;
}

long as_long(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
  return j.get<long>();
}

std::vector<long> as_long_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array of integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_long(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<long>> as_matrix(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array of arrays");
  std::vector<std::vector<long>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_long_vector(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::string> as_strings(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw SchemaError(path + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

template <typename F>
auto rethrow_at(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

Json monomial_to_json(const ParamMonomial& m, const SymbolTable& symbols) {
  Json syms = Json::object();
  for (std::size_t i = 0; i < m.sym_exps.size(); ++i) {
    if (m.sym_exps[i] != 0) syms[symbols.name(i)] = m.sym_exps[i];
  }
  return Json{{"coeff", m.coeff.to_string()}, {"q_exp", m.q_exp}, {"syms", syms}};
}

ParamMonomial monomial_from_json(const Json& j, const SymbolTable& symbols, const std::string& path) {
  ParamMonomial m = ParamMonomial::unit(symbols.size());
  if (j.contains("coeff")) {
    const Json& c = j["coeff"];
    if (c.is_string()) {
      m.coeff = rethrow_at(path + ".coeff", [&] { return Rational::parse(c.get<std::string>()); });
    } else {
      m.coeff = Rational(as_long(c, path + ".coeff"));
    }
  }
  if (j.contains("q_exp")) m.q_exp = as_long(j["q_exp"], path + ".q_exp");
  if (j.contains("syms")) {
    const Json& syms = j["syms"];
    if (!syms.is_object()) throw SchemaError(path + ".syms: expected an object");
    for (const auto& [name, value] : syms.items()) {
      auto idx = symbols.index_of(name);
      if (!idx) throw SchemaError(path + ".syms." + name + ": unknown symbol");
      m.sym_exps[*idx] = as_long(value, path + ".syms." + name);
    }
  }
  return m;
}

FinalMonomial final_from_json(const Json& j, int field_order, const std::string& path) {
  return FinalMonomial{cyclo_from_json(require(j, "c", path), field_order, path + ".c"),
                       j.contains("e") ? as_long(j["e"], path + ".e") : 0};
}

Json final_to_json(const FinalMonomial& m) { return Json{{"c", cyclo_to_json(m.c)}, {"e", m.e}}; }

}  // namespace

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(what + ": invalid JSON (" + e.what() + ")");
  }
}

Json cyclo_to_json(const CycloNum& c) {
  Json coords = Json::array();
  for (const auto& r : c.coords()) coords.push_back(r.to_string());
  return Json{{"order", c.order()}, {"coords", coords}};
}

CycloNum cyclo_from_json(const Json& j, int field_order, const std::string& path) {
  if (j.is_string()) {
    return rethrow_at(path, [&] { return CycloNum::parse(j.get<std::string>(), field_order); });
  }
  if (j.is_number_integer()) return CycloNum(Rational(j.get<long>()), field_order);
  const long order = as_long(require(j, "order", path), path + ".order");
  if (order != field_order) {
    throw SchemaError(path + ".order: " + std::to_string(order) + " does not match field order " +
                      std::to_string(field_order));
  }
  const Json& coords = require(j, "coords", path);
  if (!coords.is_array()) throw SchemaError(path + ".coords: expected an array");
  std::vector<Rational> values;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::string at = path + ".coords[" + std::to_string(i) + "]";
    if (coords[i].is_string()) {
      values.push_back(rethrow_at(at, [&] { return Rational::parse(coords[i].get<std::string>()); }));
    } else {
      values.emplace_back(as_long(coords[i], at));
    }
  }
  return rethrow_at(path + ".coords", [&] { return CycloNum::from_coords(std::move(values), field_order); });
}

Json series_to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : s.coeffs()) coeffs.push_back(Json::array({e, c.to_string()}));
  return Json{{"trunc", s.trunc()}, {"coeffs", coeffs}};
}

QSeries series_from_json(const Json& j, int field_order) {
  const Exponent trunc = as_long(require(j, "trunc", "series"), "series.trunc");
  const Json& coeffs = require(j, "coeffs", "series");
  if (!coeffs.is_array()) throw SchemaError("series.coeffs: expected an array");
  std::map<Exponent, CycloNum> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string at = "series.coeffs[" + std::to_string(i) + "]";
    const Json& entry = coeffs[i];
    if (!entry.is_array() || entry.size() != 2) throw SchemaError(at + ": expected [exp, coeff]");
    const Exponent e = as_long(entry[0], at + "[0]");
    if (e > trunc) throw SchemaError(at + ": exponent above trunc");
    if (terms.count(e) != 0) throw SchemaError(at + ": duplicate exponent");
    terms.emplace(e, cyclo_from_json(entry[1], field_order, at + "[1]"));
  }
  return QSeries::from_terms(terms, trunc, field_order);
}

Json model_to_json(const ChargeModel& model, PrefixConvention conv) {
  Json flags = Json::array();
  for (bool f : model.lambda_flags) flags.push_back(f);
  Json out{{"s", model.s},
           {"m", model.m},
           {"charges", model.charges},
           {"rep_charges", model.rep_charges},
           {"level", model.level},
           {"lambda_flags", flags},
           {"convention", to_string(conv)},
           {"p_names", model.p_names},
           {"lambda_names", model.lambda_names},
           {"novikov_names", model.novikov_names}};
  if (model.n_max) out["n_max"] = *model.n_max;
  if (!model.degrees.empty()) out["degrees"] = model.degrees;
  return out;
}

ModelFile model_from_json(const Json& j) {
  ModelFile out;
  ChargeModel& m = out.model;
  m.s = static_cast<int>(as_long(require(j, "s", "model"), "model.s"));
  m.m = static_cast<int>(as_long(require(j, "m", "model"), "model.m"));
  m.charges = as_matrix(require(j, "charges", "model"), "model.charges");
  m.rep_charges = as_matrix(require(j, "rep_charges", "model"), "model.rep_charges");
  m.level = as_long(require(j, "level", "model"), "model.level");
  const Json& flags = require(j, "lambda_flags", "model");
  if (!flags.is_array()) throw SchemaError("model.lambda_flags: expected an array of booleans");
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (!flags[i].is_boolean()) {
      throw SchemaError("model.lambda_flags[" + std::to_string(i) + "]: expected a boolean");
    }
    m.lambda_flags.push_back(flags[i].get<bool>());
  }
  if (j.contains("convention")) {
    const Json& c = j["convention"];
    if (!c.is_string()) throw SchemaError("model.convention: expected a string");
    out.convention = rethrow_at("model.convention", [&] { return parse_convention(c.get<std::string>()); });
  }
  if (j.contains("p_names")) m.p_names = as_strings(j["p_names"], "model.p_names");
  if (j.contains("lambda_names")) m.lambda_names = as_strings(j["lambda_names"], "model.lambda_names");
  if (j.contains("novikov_names")) m.novikov_names = as_strings(j["novikov_names"], "model.novikov_names");
  if (j.contains("n_max")) m.n_max = as_long(j["n_max"], "model.n_max");
  if (j.contains("degrees")) m.degrees = as_matrix(j["degrees"], "model.degrees");
  rethrow_at("model", [&] {
    m.validate();
    return 0;
  });
  return out;
}

Json specialization_to_json(const Specialization& spec, const ChargeModel& model) {
  const SymbolTable symbols = model.symbols();
  Json syms = Json::object();
  for (std::size_t i = 0; i < spec.sym_map.size(); ++i) {
    if (spec.sym_map[i]) syms[symbols.name(i)] = final_to_json(*spec.sym_map[i]);
  }
  Json nov = Json::object();
  for (std::size_t a = 0; a < spec.novikov_map.size(); ++a) {
    if (spec.novikov_map[a]) nov[model.novikov_names.at(a)] = final_to_json(*spec.novikov_map[a]);
  }
  return Json{{"field_order", spec.field_order}, {"series_power", spec.series_power}, {"symbols", syms}, {"novikov", nov}};
}

Specialization specialization_from_json(const Json& j, const ChargeModel& model) {
  if (!j.is_object()) throw SchemaError("spec: expected an object");
  Specialization spec;
  if (j.contains("field_order")) {
    spec.field_order = static_cast<int>(as_long(j["field_order"], "spec.field_order"));
    if (spec.field_order < 1) throw SchemaError("spec.field_order: must be positive");
  }
  if (j.contains("series_power")) spec.series_power = as_long(j["series_power"], "spec.series_power");
  if (spec.series_power < 1) throw SchemaError("spec.series_power: must be >= 1");

  const SymbolTable symbols = model.symbols();
  spec.sym_map.assign(symbols.size(), std::nullopt);
  const Json& syms = require(j, "symbols", "spec");
  if (!syms.is_object()) throw SchemaError("spec.symbols: expected an object");
  for (const auto& [name, value] : syms.items()) {
    auto idx = symbols.index_of(name);
    if (!idx) throw SchemaError("spec.symbols." + name + ": not a symbol of the model");
    spec.sym_map[*idx] = final_from_json(value, spec.field_order, "spec.symbols." + name);
  }
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (!spec.sym_map[i]) throw SchemaError("spec.symbols." + symbols.name(i) + ": missing field");
  }

  spec.novikov_map.assign(model.novikov_names.size(), std::nullopt);
  const Json& nov = require(j, "novikov", "spec");
  if (!nov.is_object()) throw SchemaError("spec.novikov: expected an object");
  for (const auto& [name, value] : nov.items()) {
    auto it = std::find(model.novikov_names.begin(), model.novikov_names.end(), name);
    if (it == model.novikov_names.end()) throw SchemaError("spec.novikov." + name + ": not a Novikov variable");
    spec.novikov_map[static_cast<std::size_t>(it - model.novikov_names.begin())] =
        final_from_json(value, spec.field_order, "spec.novikov." + name);
  }
  for (std::size_t a = 0; a < spec.novikov_map.size(); ++a) {
    if (!spec.novikov_map[a]) throw SchemaError("spec.novikov." + model.novikov_names[a] + ": missing field");
  }
  return spec;
}

Json term_to_json(const DegreeTerm& term, const SymbolTable& symbols) {
  Json factors = Json::array();
  for (const auto& f : term.factors()) factors.push_back(Json{{"mono", monomial_to_json(f.mono, symbols)}, {"power", f.power}});
  return Json{{"symbols", symbols.names()},
              {"degree", term.degree()},
              {"prefix", monomial_to_json(term.prefix(), symbols)},
              {"factors", factors}};
}

DegreeTerm term_from_json(const Json& j, const SymbolTable& symbols) {
  const std::vector<long> degree = as_long_vector(require(j, "degree", "term"), "term.degree");
  const ParamMonomial prefix = monomial_from_json(require(j, "prefix", "term"), symbols, "term.prefix");
  std::vector<BinomFactor> factors;
  if (j.contains("factors")) {
    const Json& fs = j["factors"];
    if (!fs.is_array()) throw SchemaError("term.factors: expected an array");
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const std::string at = "term.factors[" + std::to_string(i) + "]";
      const long power = as_long(require(fs[i], "power", at), at + ".power");
      if (power == 0) throw SchemaError(at + ".power: must be nonzero");
      factors.push_back({monomial_from_json(require(fs[i], "mono", at), symbols, at + ".mono"), power});
    }
  }
  return DegreeTerm(degree, prefix, std::move(factors));
}

Json report_to_json(const VerifyReport& report) {
  Json mismatch = nullptr;
  if (report.first_mismatch) {
    mismatch = Json{{"exp", report.first_mismatch->exp},
                    {"lhs", report.first_mismatch->lhs},
                    {"rhs", report.first_mismatch->rhs}};
  }
  return Json{{"name", report.name},
              {"status", report.pass ? "pass" : "fail"},
              {"trunc", report.trunc},
              {"first_mismatch", mismatch},
              {"elapsed_ms", std::round(report.elapsed_ms * 1000.0) / 1000.0}};
}

Json listing_to_json(const std::vector<IdentityListing>& listing) {
  Json out = Json::array();
  for (const auto& item : listing) {
    Json entry{{"name", item.name}, {"group", item.group}, {"description", item.description}};
    if (auto id = find_identity(item.name)) {
      entry["classical"] = id->classical;
      entry["prefactor"] = to_string(id->prefactor);
      entry["rhs_oracle"] = id->rhs_oracle;
      entry["rhs_start"] = id->rhs_start;
      entry["series_power"] = id->spec.series_power;
      entry["model"] = model_to_json(id->model, id->convention);
      entry["spec"] = specialization_to_json(id->spec, id->model);
    }
    out.push_back(entry);
  }
  return out;
}

Json suites_to_json(const std::vector<SuiteResult>& suites) {
  Json out = Json::array();
  for (const auto& s : suites) {
    out.push_back(Json{{"suite", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"first_failure", s.first_failure}});
  }
  return out;
}

}  // namespace mockq
