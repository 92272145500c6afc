#include "spinor/serialize.hpp"

#include "spinor/errors.hpp"

#include <fstream>
#include <sstream>

namespace spinor {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

template <typename T>
T typed(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(where + ": field '" + key + "' has the wrong type");
  }
}

Complex complex_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError(what + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json integer_to_json(const Integer& value) { return to_decimal(value); }

Integer integer_from_json(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + ": big integers must be decimal strings");
  return parse_decimal(j.get<std::string>());
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const EigenvalueRecord& record) {
  Json eig = Json::array();
  for (const auto& e : record.eigenvalues) {
    Json entry{{"p", e.p}, {"lambda_p", integer_to_json(e.lambda_p)}};
    if (e.lambda_p2) entry["lambda_p2"] = integer_to_json(*e.lambda_p2);
    eig.push_back(std::move(entry));
  }
  return Json{{"label", record.label}, {"degree", record.degree}, {"weight", record.weight}, {"eigenvalues", eig}};
}

EigenvalueRecord record_from_json(const Json& j) {
  EigenvalueRecord r;
  r.label = typed<std::string>(j, "label", "record");
  const std::string where = "record '" + r.label + "'";
  r.degree = typed<int>(j, "degree", where);
  r.weight = typed<int>(j, "weight", where);
  const Json& eig = field(j, "eigenvalues", where);
  if (!eig.is_array()) throw InputError(where + ": eigenvalues must be an array");
  for (const auto& e : eig) {
    EigenvalueEntry entry;
    entry.p = typed<long>(e, "p", where);
    entry.lambda_p = integer_from_json(field(e, "lambda_p", where), where + " lambda_p");
    if (e.contains("lambda_p2")) entry.lambda_p2 = integer_from_json(e.at("lambda_p2"), where + " lambda_p2");
    r.eigenvalues.push_back(std::move(entry));
  }
  r.validate();
  return r;
}

Json to_json(const LocalFactor& factor) {
  Json coeffs = Json::array();
  Json out{{"p", factor.prime()}, {"degree", factor.degree()}, {"rep", factor.rep()}};
  if (factor.is_exact()) {
    for (const auto& c : factor.exact()) coeffs.push_back(integer_to_json(c));
  } else {
    out["mode"] = "numeric";
    for (const auto& c : factor.numeric()) coeffs.push_back(complex_to_json(c));
  }
  out["coeffs"] = std::move(coeffs);
  return out;
}

LocalFactor local_factor_from_json(const Json& j) {
  const std::string where = "local factor";
  long p = typed<long>(j, "p", where);
  int degree = typed<int>(j, "degree", where);
  std::string rep = typed<std::string>(j, "rep", where);
  const Json& coeffs = field(j, "coeffs", where);
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != degree + 1)
    throw InputError(where + ": expected degree + 1 coefficients");
  if (j.value("mode", std::string("exact")) == "numeric") {
    LocalFactor::NumericCoeffs c;
    for (const auto& v : coeffs) c.push_back(complex_from_json(v, where));
    return LocalFactor(p, rep, std::move(c));
  }
  LocalFactor::ExactCoeffs c;
  for (const auto& v : coeffs) c.push_back(integer_from_json(v, where));
  return LocalFactor(p, rep, std::move(c));
}

Json to_json(const SatakeParams& sp) {
  Json mu = Json::array();
  for (const auto& m : sp.mu) mu.push_back(complex_to_json(m));
  return Json{{"degree", sp.degree}, {"weight", sp.weight}, {"p", sp.prime},
              {"mu0", complex_to_json(sp.mu0)}, {"mu", mu}};
}

Json to_json(const HodgeType& h) {
  Json pairs = Json::array();
  for (const auto& [p, q] : h.pairs()) pairs.push_back(Json::array({p, q}));
  Json out{{"pairs", pairs}};
  if (auto w = h.pure_weight()) out["weight"] = *w;
  else out["weight"] = nullptr;
  return out;
}

Json to_json(const WeightTriple& w) { return Json{{"k", w.k}, {"l", w.l}, {"K", w.K}}; }

Json to_json(const WeightRejection& r) {
  Json compared = Json::array();
  for (const auto& [K, h] : r.compared) compared.push_back(Json{{"K", K}, {"hodge", to_json(h)}});
  return Json{{"k1", r.k1}, {"k2", r.k2}, {"tensor", to_json(r.tensor)}, {"compared", compared}};
}

Json to_json(const GammaProfile& g) {
  return Json{{"shifts", g.shifts},
              {"prefactor", Json{{"rational", g.prefactor.get_str()}, {"two_pi_exponent", g.two_pi_exponent}}},
              {"center", g.center}};
}

Json to_json(const CuspidalityReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    cases.push_back(Json{{"model", to_string(c.kind)},
                         {"log_moduli", c.log_moduli},
                         {"has_unit_parameter", c.has_unit_parameter},
                         {"orbit_product_exponents", c.orbit_product_exponents},
                         {"chai_faltings_degree3", c.chai_faltings_degree3},
                         {"refuted", c.refuted},
                         {"reason", c.reason}});
  }
  return Json{{"cuspidal", r.cuspidal},
              {"lifted_has_unit_parameter", r.lifted_has_unit_parameter},
              {"lifted_chai_faltings", r.lifted_chai_faltings},
              {"elliptic_ramanujan", r.gl2_ramanujan},
              {"cases", cases},
              {"warnings", r.warnings}};
}

Json to_json(const EulerProductResult& r) {
  return Json{{"value", complex_to_json(r.value)},
              {"prime_bound", r.prime_bound},
              {"primes_used", r.primes_used},
              {"log_tail_bound", r.log_tail_bound},
              {"value_error_bound", r.value_error_bound},
              {"abscissa", r.abscissa},
              {"theta", r.theta}};
}

const EigenvalueRecord& Fixtures::find(const std::string& label) const {
  for (const auto& r : records)
    if (r.label == label) return r;
  throw InputError("fixtures have no record labelled '" + label + "'");
}

Json to_json(const Fixtures& fixtures) {
  Json records = Json::array();
  for (const auto& r : fixtures.records) records.push_back(to_json(r));
  return Json{{"schema_version", kSchemaVersion},
              {"config", Json{{"prime_bound", fixtures.config.prime_bound},
                              {"truncation", fixtures.config.truncation}}},
              {"records", records}};
}

Fixtures fixtures_from_json(const Json& j) {
  const std::string where = "fixtures";
  int version = typed<int>(j, "schema_version", where);
  if (version != kSchemaVersion) throw InputError("unsupported fixtures schema version " + std::to_string(version));
  Fixtures f;
  const Json& config = field(j, "config", where);
  f.config.prime_bound = typed<long>(config, "prime_bound", where);
  f.config.truncation = typed<std::size_t>(config, "truncation", where);
  const Json& records = field(j, "records", where);
  if (!records.is_array()) throw InputError("fixtures: records must be an array");
  for (const auto& r : records) f.records.push_back(record_from_json(r));
  return f;
}

std::string dump_fixtures(const Fixtures& fixtures) { return to_json(fixtures).dump(2) + "\n"; }

void write_fixtures(const std::filesystem::path& path, const Fixtures& fixtures) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write fixtures to " + path.string());
  out << dump_fixtures(fixtures);
  if (!out) throw InputError("failed writing fixtures to " + path.string());
}

Fixtures read_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("fixtures file not found: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("fixtures file " + path.string() + " is not valid JSON: " + e.what());
  }
  return fixtures_from_json(j);
}

}  // namespace spinor
