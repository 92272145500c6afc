#include "spinor/cli.hpp"

#include "spinor/analytic.hpp"
#include "spinor/cuspidality.hpp"
#include "spinor/errors.hpp"
#include "spinor/hodge.hpp"
#include "spinor/lifting.hpp"
#include "spinor/modforms.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace spinor::cli {

namespace {

const Integer kMiyawakiLambda2 = -293760;  // -2^7 * 2295

Json envelope(const std::string& command, Json result) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"result", std::move(result)}};
}

void flatten(const Json& node, const std::string& path, std::ostream& out) {
  if (node.is_object() && !node.empty()) {
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array() && !node.empty() && !std::all_of(node.begin(), node.end(), [](const Json& v) {
               return v.is_primitive();
             })) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << '\t' << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
  }
}

Fixtures load(const RunConfig& config) { return read_fixtures(config.fixtures_path); }

SatakeParams record_satake(const EigenvalueRecord& r, long p) {
  const auto& e = r.at(p);
  if (r.degree == 1) return satake_from_gl2(r.weight, p, e.lambda_p);
  if (r.degree == 2) {
    if (!e.lambda_p2) throw InputError("record '" + r.label + "' lacks lambda_p2 at p=" + std::to_string(p));
    return satake_from_gsp4(r.weight, p, e.lambda_p, *e.lambda_p2);
  }
  throw InputError("record '" + r.label + "' has unsupported degree " + std::to_string(r.degree));
}

void require_prime(long p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

// ---- command builders ----

CommandResult build_satake(const RunConfig& config, const std::string& label, long p, bool orbit) {
  require_prime(p);
  Fixtures fx = load(config);
  const auto& r = fx.find(label);
  SatakeParams sp = record_satake(r, p);
  Json out{{"label", label},
           {"satake", to_json(sp)},
           {"normalization_holds", check_normalization(sp, config.tolerance)},
           {"hecke_eigenvalue", complex_to_json(hecke_eigenvalue(sp))},
           {"lambda_p", integer_to_json(r.at(p).lambda_p)},
           {"ramanujan", ramanujan_check(sp, config.tolerance)}};
  if (sp.weight > sp.degree) out["chai_faltings"] = chai_faltings_test(sp, config.tolerance);
  else out["chai_faltings"] = nullptr;
  auto elements = weyl_orbit(sp);
  out["orbit_size"] = elements.size();
  if (orbit) {
    Json list = Json::array();
    for (const auto& e : elements) list.push_back(to_json(e));
    out["orbit"] = std::move(list);
  }
  return {std::move(out), kSuccess};
}

CommandResult build_local_factor(const RunConfig& config, const std::string& label, long p, const std::string& rep) {
  require_prime(p);
  Fixtures fx = load(config);
  const auto& r = fx.find(label);
  if (rep == "standard") return {to_json(standard_local_factor(record_satake(r, p))), kSuccess};
  if (rep != "spin") throw InputError("unknown representation '" + rep + "' (spin|standard)");
  if (!config.exact) return {to_json(spin_local_factor(record_satake(r, p))), kSuccess};
  const auto& e = r.at(p);
  if (r.degree == 1) return {to_json(gl2_factor_exact(r.weight, p, e.lambda_p)), kSuccess};
  if (r.degree == 2) {
    if (!e.lambda_p2) throw InputError("record '" + label + "' lacks lambda_p2 at p=" + std::to_string(p));
    return {to_json(gsp4_spin_factor_exact(r.weight, p, e.lambda_p, *e.lambda_p2)), kSuccess};
  }
  throw InputError("exact spin factors exist for degrees 1 and 2 only");
}

CommandResult build_lift(const RunConfig& config, const std::string& h_label, const std::string& g_label, long p,
                         bool verify) {
  require_prime(p);
  Fixtures fx = load(config);
  const auto& h = fx.find(h_label);
  const auto& g = fx.find(g_label);
  if (h.degree != 1 || g.degree != 2) throw InputError("lift needs a degree-1 record and a degree-2 record");
  auto weights = lift_weights(h.weight, g.weight);
  if (const auto* rej = std::get_if<WeightRejection>(&weights)) {
    Json out{{"accepted", false}, {"rejection", to_json(*rej)}};
    return {std::move(out), kBadInput};
  }
  LiftInput in = lift_input_from_records(h, g, p);
  SatakeParams lifted = theta_lift(in);
  TensorIdentityReport report = verify_tensor_identity(in, config.exact);
  Integer expected = h.at(p).lambda_p * g.at(p).lambda_p;
  EigenvalueProduct product = verify_eigenvalue_product(h, g, expected, p);

  Json out{{"accepted", true},
           {"weight", std::get<int>(weights)},
           {"p", p},
           {"mode", config.exact ? "exact" : "numeric"},
           {"lifted_satake", to_json(lifted)},
           {"lifted_normalization_holds", check_normalization(lifted, 1e-6)},
           {"lifted_hecke_eigenvalue", complex_to_json(hecke_eigenvalue(lifted))},
           {"eigenvalue_product", integer_to_json(product.product)},
           {"theta_route", to_json(report.theta_route)},
           {"tensor_route", to_json(report.tensor_route)},
           {"tensor_identity_holds", report.holds}};
  bool ok = report.holds;
  if (report.theta_route.is_exact()) {
    Integer lifted_lambda = -report.theta_route.exact()[1];
    bool match = lifted_lambda == product.product;
    out["lifted_lambda_p"] = integer_to_json(lifted_lambda);
    out["eigenvalue_product_matches"] = match;
    ok = ok && match;
  }
  out["verified"] = ok;
  return {std::move(out), (verify && !ok) ? kVerificationFailure : kSuccess};
}

CommandResult build_cuspidality(const RunConfig& config, std::optional<int> k, long p,
                                const std::string& h_label, const std::string& g_label) {
  require_prime(p);
  std::optional<LiftInput> in;
  std::string source;
  if (!h_label.empty() || !g_label.empty()) {
    if (h_label.empty() || g_label.empty()) throw InputError("--h and --g must be given together");
    Fixtures fx = load(config);
    in = lift_input_from_records(fx.find(h_label), fx.find(g_label), p);
    if (k && *k != in->gsp4_weight())
      throw InputError("--k " + std::to_string(*k) + " disagrees with the record weight " +
                       std::to_string(in->gsp4_weight()));
    source = h_label + " x " + g_label;
  } else {
    if (!k) throw InputError("cuspidality needs --k or --h/--g");
    in = tempered_lift_input(*k, p);
    source = "tempered";
  }
  auto models = standard_models(*in, config.tolerance);
  CuspidalityReport report = cuspidality_decision(*in, models, config.tolerance);
  Json out = to_json(report);
  out["k"] = in->gsp4_weight();
  out["p"] = p;
  out["source"] = source;
  return {std::move(out), report.cuspidal ? kSuccess : kVerificationFailure};
}

CommandResult build_hodge_show(const std::string& type, int weight) {
  HodgeType h;
  if (type == "gl2") h = hodge_gl2(weight);
  else if (type == "gsp4") h = hodge_gsp4(weight);
  else if (type == "gsp6") h = hodge_gsp6(weight);
  else throw InputError("unknown Hodge type '" + type + "' (gl2|gsp4|gsp6)");
  Json out = to_json(h);
  out["type"] = type;
  out["input_weight"] = weight;
  return {std::move(out), kSuccess};
}

CommandResult build_hodge_solve(int min_weight, int max_weight) {
  auto solutions = weight_solver(min_weight, max_weight);
  Json list = Json::array();
  bool family = true;
  for (const auto& w : solutions) {
    list.push_back(to_json(w));
    family = family && w.k == w.K - 2 && w.l == w.K;
  }
  return {Json{{"min", min_weight}, {"max", max_weight}, {"solutions", list}, {"family_k_eq_K_minus_2_l_eq_K", family}},
          kSuccess};
}

CommandResult build_critical(int k) {
  auto values = critical_values(k);
  Json exponents = Json::object();
  for (int m : values) exponents[std::to_string(m)] = deligne_pi_exponent(m, k);
  return {Json{{"k", k},
               {"center", linf_spin3(k).center},
               {"critical_values", values},
               {"count", values.size()},
               {"pi_exponents", exponents}},
          kSuccess};
}

CommandResult build_gamma(int k, bool compare_rs, std::optional<double> s) {
  GammaProfile spin = linf_spin3(k);
  Json out{{"k", k}, {"spin3", to_json(spin)}};
  int status = kSuccess;
  if (s) {
    Complex v = spin.evaluate(*s);
    out["s"] = *s;
    out["spin3_value"] = complex_to_json(v);
  }
  if (compare_rs) {
    GammaProfile rs = linf_rankin_selberg(k - 2, k);
    bool shifts = rs.shifts == spin.shifts;
    bool centers = rs.center == spin.center;
    out["rankin_selberg"] = to_json(rs);
    out["shifts_agree"] = shifts;
    out["centers_agree"] = centers;
    if (!(shifts && centers)) status = kVerificationFailure;
  }
  return {std::move(out), status};
}

CommandResult build_lvalue(const RunConfig& config, const std::string& h_label, const std::string& g_label,
                           Complex s, std::optional<int> motivic_weight, unsigned threads) {
  Fixtures fx = load(config);
  const auto& h = fx.find(h_label);
  const auto& g = fx.find(g_label);
  const long bound = config.prime_bound;
  if (fx.config.prime_bound < bound)
    throw InputError("fixtures cover primes up to " + std::to_string(fx.config.prime_bound) +
                     ", prime bound " + std::to_string(bound) + " requested; regenerate with fixtures gen --prime-bound");
  auto primes = primes_up_to(bound);
  for (long p : primes) {
    h.at(p);
    g.at(p);
  }
  auto weights = lift_weights(h.weight, g.weight);
  if (std::holds_alternative<WeightRejection>(weights))
    throw InputError("records " + h_label + ", " + g_label + " do not have liftable weights");
  const int k = std::get<int>(weights);

  bool tempered = true;
  for (long p : primes) tempered = tempered && ramanujan_check(record_satake(g, p), 1e-6);
  int w = motivic_weight ? *motivic_weight : (tempered ? 3 * k - 6 : 3 * k - 5);

  FactorProvider provider = [&](long p) { return tensor_route_factor(lift_input_from_records(h, g, p), true); };
  EulerProductOptions options;
  options.threads = threads;
  EulerProductResult res = truncated_euler_product(provider, s, bound, w, options);
  Json out = to_json(res);
  out["k"] = k;
  out["s"] = complex_to_json(s);
  out["motivic_weight"] = w;
  out["degree2_tempered"] = tempered;
  if (auto c3 = convergence_abscissa(3, k, true)) out["tempered_abscissa_c3"] = *c3;
  return {std::move(out), kSuccess};
}

}  // namespace

void RunConfig::validate() const {
  if (!(tolerance > 0.0)) throw InputError("tolerance must be positive");
  if (prime_bound < 2) throw InputError("prime bound must be at least 2");
}

std::string resolve_fixtures_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv(kFixturesEnv); env && *env) return env;
  return kDefaultFixtures;
}

std::string render_table(const Json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

CommandResult cmd_fixtures_gen(const RunConfig& config, std::size_t truncation) {
  config.validate();
  Fixtures fx;
  fx.config.prime_bound = config.prime_bound;
  fx.config.truncation = truncation;
  fx.records = modforms::generate_fixture_records(fx.config);
  write_fixtures(config.fixtures_path, fx);
  Json labels = Json::array();
  for (const auto& r : fx.records) labels.push_back(r.label);
  return {Json{{"path", config.fixtures_path},
               {"prime_bound", fx.config.prime_bound},
               {"truncation", fx.config.truncation},
               {"labels", labels}},
          kSuccess};
}

CommandResult cmd_verify_miyawaki(const RunConfig& config) {
  Fixtures fx = load(config);
  const auto& h = fx.find("Delta.12.1");
  const auto& g = fx.find("SK.14.2");
  constexpr long p = 2;

  // Independent rebuild from the q-expansions.
  Integer tau2 = modforms::delta(8).integer_coefficient(2);
  Integer a2 = modforms::newform_weight26(8).integer_coefficient(2);
  Integer lambda2_g = modforms::saito_kurokawa_lambda_p(14, p, a2);

  Json checks = Json::array();
  bool all = true;
  auto check = [&](const std::string& name, bool pass, Json expected, Json actual) {
    checks.push_back(Json{{"name", name}, {"pass", pass}, {"expected", std::move(expected)}, {"actual", std::move(actual)}});
    all = all && pass;
  };

  const Integer& fx_tau2 = h.at(p).lambda_p;
  const Integer& fx_lambda2 = g.at(p).lambda_p;
  check("fixture tau(2) matches q-expansion", fx_tau2 == tau2, integer_to_json(tau2), integer_to_json(fx_tau2));
  check("fixture lambda_2(G) matches q-expansion", fx_lambda2 == lambda2_g, integer_to_json(lambda2_g),
        integer_to_json(fx_lambda2));
  check("tau(2) * lambda_2(G) from q-expansions", tau2 * lambda2_g == kMiyawakiLambda2,
        integer_to_json(kMiyawakiLambda2), integer_to_json(tau2 * lambda2_g));
  auto product = verify_eigenvalue_product(h, g, kMiyawakiLambda2, p);
  check("tau(2) * lambda_2(G) from fixtures", product.matches.value_or(false), integer_to_json(kMiyawakiLambda2),
        integer_to_json(product.product));

  try {
    LiftInput in = lift_input_from_records(h, g, p);
    TensorIdentityReport tensor = verify_tensor_identity(in, true);
    check("exact tensor identity at p=2", tensor.holds, to_json(tensor.tensor_route), to_json(tensor.theta_route));
    Integer lifted = -tensor.theta_route.exact()[1];
    check("lambda_2(F) from the lifted spin factor", lifted == kMiyawakiLambda2, integer_to_json(kMiyawakiLambda2),
          integer_to_json(lifted));
    CuspidalityReport cusp = cuspidality_decision(in, standard_models(in, config.tolerance), config.tolerance);
    check("cuspidality of the lift", cusp.cuspidal, true, to_json(cusp));
  } catch (const InputError& e) {
    // Corrupted eigenvalues can leave the degree-2 factor without a rational splitting.
    check("lift data at p=2", false, "consistent eigenvalues", e.what());
  }
  return {Json{{"pass", all}, {"checks", checks}}, all ? kSuccess : kVerificationFailure};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spinor L-functions for the lift GL(2) x GSp(4) -> GSp(6)", "spinor"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  std::string fixtures_flag;
  std::string format = "json";
  double tolerance = kDefaultTolerance;
  app.add_option("--fixtures", fixtures_flag,
                 std::string("fixtures file (default: $") + kFixturesEnv + " or " + kDefaultFixtures + ")");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--tol", tolerance, "absolute tolerance for modulus tests");

  std::function<CommandResult(const RunConfig&)> action;
  std::string command;
  auto config_for = [&](long bound) {
    RunConfig c;
    c.fixtures_path = resolve_fixtures_path(fixtures_flag);
    c.prime_bound = bound;
    c.tolerance = tolerance;
    c.format = format == "table" ? OutputFormat::Table : OutputFormat::Json;
    return c;
  };
  long prime_bound = 50;
  bool numeric = false;
  bool exact_flag = false;

  // fixtures gen
  auto* fixtures = app.add_subcommand("fixtures", "fixture generation")->require_subcommand(1);
  auto* gen = fixtures->add_subcommand("gen", "write eigenvalue fixtures generated from q-expansions");
  std::size_t truncation = modforms::kDefaultTruncation;
  std::string out_path;
  gen->add_option("--prime-bound", prime_bound, "largest prime covered")->capture_default_str();
  gen->add_option("--truncation", truncation, "minimum q-expansion order")->capture_default_str();
  gen->add_option("--out", out_path, "output path (default: the fixtures path)");
  gen->callback([&] {
    command = "fixtures gen";
    action = [&](const RunConfig& c) {
      RunConfig copy = c;
      if (!out_path.empty()) copy.fixtures_path = out_path;
      return cmd_fixtures_gen(copy, truncation);
    };
  });

  // satake
  std::string label;
  long p = 2;
  bool orbit = false;
  auto* satake = app.add_subcommand("satake", "Satake parameters of a fixture record at p");
  satake->add_option("--label", label, "record label")->required();
  satake->add_option("--p", p, "prime")->required();
  satake->add_flag("--orbit", orbit, "list the Weyl orbit");
  satake->callback([&] {
    command = "satake";
    action = [&](const RunConfig& c) { return build_satake(c, label, p, orbit); };
  });

  // local-factor
  std::string rep = "spin";
  auto* local = app.add_subcommand("local-factor", "local L-factor of a fixture record at p");
  local->add_option("--label", label, "record label")->required();
  local->add_option("--p", p, "prime")->required();
  local->add_option("--rep", rep, "spin or standard")->capture_default_str();
  local->add_flag("--numeric", numeric, "numeric coefficients (default exact for spin)");
  local->callback([&] {
    command = "local-factor";
    action = [&](const RunConfig& c) {
      RunConfig copy = c;
      copy.exact = !numeric;
      return build_local_factor(copy, label, p, rep);
    };
  });

  // lift
  std::string h_label, g_label;
  bool verify_flag = false;
  auto* lift = app.add_subcommand("lift", "torus lift of an elliptic and a degree-2 record");
  lift->add_option("--h", h_label, "elliptic record label")->required();
  lift->add_option("--g", g_label, "degree-2 record label")->required();
  lift->add_option("--p", p, "prime")->required();
  lift->add_flag("--verify", verify_flag, "exit 1 when a verification fails");
  lift->add_flag("--exact", exact_flag, "exact arithmetic (default)");
  lift->add_flag("--numeric", numeric, "floating-point arithmetic");
  lift->callback([&] {
    command = "lift";
    action = [&](const RunConfig& c) {
      if (exact_flag && numeric) throw InputError("--exact and --numeric are exclusive");
      RunConfig copy = c;
      copy.exact = !numeric;
      return build_lift(copy, h_label, g_label, p, verify_flag);
    };
  });

  // cuspidality
  int k = 0;
  auto* cusp = app.add_subcommand("cuspidality", "refute the Eisenstein models for the lift");
  auto* k_opt = cusp->add_option("--k", k, "weight of the lift");
  cusp->add_option("--p", p, "prime")->required();
  cusp->add_option("--h", h_label, "elliptic record label");
  cusp->add_option("--g", g_label, "degree-2 record label");
  cusp->callback([&] {
    command = "cuspidality";
    action = [&, k_opt](const RunConfig& c) {
      return build_cuspidality(c, k_opt->count() ? std::optional<int>(k) : std::nullopt, p, h_label, g_label);
    };
  });

  // hodge show | solve
  auto* hodge = app.add_subcommand("hodge", "Hodge types")->require_subcommand(1);
  std::string type;
  int weight = 0;
  auto* show = hodge->add_subcommand("show", "Hodge type of a motive");
  show->add_option("--type", type, "gl2, gsp4 or gsp6")->required()->check(CLI::IsMember({"gl2", "gsp4", "gsp6"}));
  show->add_option("--weight", weight, "weight")->required();
  show->callback([&] {
    command = "hodge show";
    action = [&](const RunConfig&) { return build_hodge_show(type, weight); };
  });
  int min_weight = 8, max_weight = 40;
  auto* solve = hodge->add_subcommand("solve", "weights whose Kuenneth product matches a degree-3 type");
  solve->add_option("--min", min_weight, "smallest weight")->capture_default_str();
  solve->add_option("--max", max_weight, "largest weight")->capture_default_str();
  solve->callback([&] {
    command = "hodge solve";
    action = [&](const RunConfig&) { return build_hodge_solve(min_weight, max_weight); };
  });

  // critical
  auto* critical = app.add_subcommand("critical", "critical integers of the degree-3 spinor L-function");
  critical->add_option("--k", k, "weight")->required();
  critical->callback([&] {
    command = "critical";
    action = [&](const RunConfig&) { return build_critical(k); };
  });

  // gamma
  bool compare_rs = false;
  double s_real = 0.0;
  auto* gamma = app.add_subcommand("gamma", "archimedean Gamma profile");
  gamma->add_option("--k", k, "weight")->required();
  gamma->add_flag("--compare-rs", compare_rs, "compare with the Rankin-Selberg profile of (k-2, k)");
  auto* gamma_s = gamma->add_option("--s", s_real, "evaluate the profile at s");
  gamma->callback([&, gamma_s] {
    command = "gamma";
    action = [&, gamma_s](const RunConfig&) {
      return build_gamma(k, compare_rs, gamma_s->count() ? std::optional<double>(s_real) : std::nullopt);
    };
  });

  // lvalue
  double s_imag = 0.0;
  int motivic_weight = 0;
  unsigned threads = 1;
  auto* lvalue = app.add_subcommand("lvalue", "truncated Euler product of the lifted spinor L-function");
  lvalue->add_option("--h", h_label, "elliptic record label")->required();
  lvalue->add_option("--g", g_label, "degree-2 record label")->required();
  lvalue->add_option("--s", s_real, "real part of s")->required();
  lvalue->add_option("--s-imag", s_imag, "imaginary part of s");
  lvalue->add_option("--prime-bound", prime_bound, "largest prime in the product")->capture_default_str();
  auto* w_opt = lvalue->add_option("--motivic-weight", motivic_weight,
                                   "root bound |r| <= p^(w/2) (default 3k-6, or 3k-5 for a non-tempered degree-2 form)");
  lvalue->add_option("--threads", threads, "worker threads for per-prime evaluation")->capture_default_str();
  lvalue->callback([&, w_opt] {
    command = "lvalue";
    action = [&, w_opt](const RunConfig& c) {
      return build_lvalue(c, h_label, g_label, Complex(s_real, s_imag),
                          w_opt->count() ? std::optional<int>(motivic_weight) : std::nullopt, threads);
    };
  });

  // verify miyawaki
  auto* verify = app.add_subcommand("verify", "end-to-end verifications")->require_subcommand(1);
  auto* miyawaki = verify->add_subcommand("miyawaki", "lambda_2(F) = tau(2) lambda_2(G) = -293760 and the lift checks");
  miyawaki->callback([&] {
    command = "verify miyawaki";
    action = [&](const RunConfig& c) { return cmd_verify_miyawaki(c); };
  });

  // report
  std::string subject;
  auto* report = app.add_subcommand("report", "any module output under the common schema");
  report->add_option("--subject", subject, "satake|local-factor|lift|cuspidality|hodge-show|hodge-solve|critical|gamma|miyawaki")
      ->required();
  auto* r_k = report->add_option("--k", k, "weight");
  report->add_option("--p", p, "prime");
  report->add_option("--label", label, "record label");
  report->add_option("--h", h_label, "elliptic record label");
  report->add_option("--g", g_label, "degree-2 record label");
  report->add_option("--type", type, "Hodge type");
  report->add_option("--weight", weight, "Hodge weight");
  report->add_option("--min", min_weight, "smallest weight");
  report->add_option("--max", max_weight, "largest weight");
  report->callback([&, r_k] {
    command = "report";
    action = [&, r_k](const RunConfig& c) {
      auto need_k = [&] {
        if (!r_k->count()) throw InputError("subject '" + subject + "' needs --k");
        return k;
      };
      static const std::map<std::string, int> known{{"satake", 0},      {"local-factor", 1}, {"lift", 2},
                                                    {"cuspidality", 3}, {"hodge-show", 4},   {"hodge-solve", 5},
                                                    {"critical", 6},    {"gamma", 7},        {"miyawaki", 8}};
      auto it = known.find(subject);
      if (it == known.end()) throw InputError("unknown report subject '" + subject + "'");
      CommandResult r;
      switch (it->second) {
        case 0: r = build_satake(c, label, p, false); break;
        case 1: r = build_local_factor(c, label, p, "spin"); break;
        case 2: r = build_lift(c, h_label, g_label, p, false); break;
        case 3:
          r = build_cuspidality(c, r_k->count() ? std::optional<int>(k) : std::nullopt, p, h_label, g_label);
          break;
        case 4: r = build_hodge_show(type, weight); break;
        case 5: r = build_hodge_solve(min_weight, max_weight); break;
        case 6: r = build_critical(need_k()); break;
        case 7: r = build_gamma(need_k(), true, std::nullopt); break;
        default: r = cmd_verify_miyawaki(c); break;
      }
      return CommandResult{Json{{"subject", subject}, {"data", std::move(r.result)}}, r.status};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kBadInput;
  }

  try {
    RunConfig config = config_for(prime_bound);
    config.validate();
    CommandResult r = action(config);
    Json doc = envelope(command, std::move(r.result));
    if (config.format == OutputFormat::Table) out << render_table(doc);
    else out << doc.dump(2) << '\n';
    return r.status;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DomainError& e) {
    err << "numerical domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
}

}  // namespace spinor::cli
