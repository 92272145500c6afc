#include "spinor/cuspidality.hpp"

#include "spinor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spinor {

std::string to_string(EisensteinKind kind) {
  switch (kind) {
    case EisensteinKind::SiegelEisenstein: return "siegel";
    case EisensteinKind::KlingenFromDegree2: return "klingen-degree2";
    case EisensteinKind::KlingenFromElliptic: return "klingen-elliptic";
  }
  return "unknown";
}

namespace {

double log_p_abs(Complex z, long p) { return std::log(std::abs(z)) / std::log(static_cast<double>(p)); }

std::size_t expected_gamma(EisensteinKind kind) {
  switch (kind) {
    case EisensteinKind::SiegelEisenstein: return 0;
    case EisensteinKind::KlingenFromDegree2: return 2;
    case EisensteinKind::KlingenFromElliptic: return 1;
  }
  return 0;
}

void check_model(const EisensteinModel& model) {
  if (model.weight < 1) throw InputError("Eisenstein model weight must be positive");
  if (!is_prime(model.prime)) throw InputError("Eisenstein model prime is not prime");
  std::size_t need = expected_gamma(model.kind);
  if (model.gamma.size() != need)
    throw InputError("model " + to_string(model.kind) + " needs " + std::to_string(need) +
                     " cusp-form parameters, got " + std::to_string(model.gamma.size()));
}

// Distinct values of sum_i eps_i e_i over all sign choices; these are the
// log-moduli of mu1 mu2 mu3 across the Weyl orbit.
std::vector<double> signed_sums(const std::vector<double>& e, double tol) {
  std::vector<double> sums;
  for (unsigned mask = 0; mask < (1u << e.size()); ++mask) {
    double s = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) s += ((mask >> i) & 1u) ? -e[i] : e[i];
    if (std::fabs(s) <= tol) s = 0.0;
    if (std::none_of(sums.begin(), sums.end(), [&](double x) { return std::fabs(x - s) <= tol; }))
      sums.push_back(s);
  }
  std::sort(sums.begin(), sums.end());
  return sums;
}

std::string format_exponents(const std::vector<double>& e) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? ", " : "") << e[i];
  out << ')';
  return out.str();
}

}  // namespace

std::vector<double> log_moduli(const EisensteinModel& model) {
  check_model(model);
  const double k = model.weight;
  auto g = [&](std::size_t i) { return log_p_abs(model.gamma[i], model.prime); };
  switch (model.kind) {
    case EisensteinKind::SiegelEisenstein: return {k - 3, k - 2, k - 1};
    case EisensteinKind::KlingenFromDegree2: return {g(0), g(1), k - 3};
    case EisensteinKind::KlingenFromElliptic: return {g(0), k - 2, k - 3};
  }
  return {};
}

SatakeParams eisenstein_params(const EisensteinModel& model) {
  check_model(model);
  const double p = static_cast<double>(model.prime);
  const int k = model.weight;
  auto pw = [p](int e) { return Complex(std::pow(p, e), 0.0); };
  std::vector<Complex> mu;
  switch (model.kind) {
    case EisensteinKind::SiegelEisenstein: mu = {pw(k - 3), pw(k - 2), pw(k - 1)}; break;
    case EisensteinKind::KlingenFromDegree2: mu = {model.gamma[0], model.gamma[1], pw(k - 3)}; break;
    case EisensteinKind::KlingenFromElliptic: mu = {model.gamma[0], pw(k - 2), pw(k - 3)}; break;
  }
  // mu0 = sqrt(p^(3k-6) / (mu1 mu2 mu3)), in log form.
  Complex log_mu0 = 0.5 * (static_cast<double>(3 * k - 6) * std::log(p));
  for (const auto& m : mu) log_mu0 -= 0.5 * std::log(m);
  return make_satake(3, k, model.prime, std::exp(log_mu0), std::move(mu));
}

bool chai_faltings_test(const SatakeParams& sp, double tol) {
  return chai_faltings_representative(sp, tol).has_value();
}

std::optional<SatakeParams> chai_faltings_representative(const SatakeParams& sp, double tol) {
  sp.validate();
  if (sp.weight <= sp.degree)
    throw InputError("Chai-Faltings criterion needs k > n (k=" + std::to_string(sp.weight) +
                     ", n=" + std::to_string(sp.degree) + ")");
  for (const auto& elem : weyl_orbit(sp)) {
    double e = 0.0;
    for (const auto& m : elem.mu) e += log_p_abs(m, sp.prime);
    if (std::fabs(e) <= tol) return elem;
  }
  return std::nullopt;
}

bool lifted_mu_constraint(const LiftInput& in, double tol) {
  SatakeParams lifted = theta_lift(in);
  return std::any_of(lifted.mu.begin(), lifted.mu.end(),
                     [&](Complex m) { return std::fabs(log_p_abs(m, lifted.prime)) <= tol; });
}

CuspidalityReport cuspidality_decision(const LiftInput& in, const std::vector<EisensteinModel>& models,
                                       double tol) {
  auto weights = lift_weights(in.gl2_weight(), in.gsp4_weight());
  if (std::holds_alternative<WeightRejection>(weights))
    throw InputError("cuspidality decision needs liftable weights k1 = k2 - 2");
  const int k = std::get<int>(weights);

  CuspidalityReport report;
  report.gl2_ramanujan = ramanujan_check(in.gl2_satake(), tol);
  report.lifted_has_unit_parameter = lifted_mu_constraint(in, tol);
  report.lifted_chai_faltings = chai_faltings_test(theta_lift(in), tol);
  if (!report.gl2_ramanujan) report.warnings.push_back("elliptic component violates Ramanujan-Petersson");
  if (models.empty()) report.warnings.push_back("no candidate Eisenstein models supplied; cuspidality is vacuous");

  bool all_refuted = true;
  for (const auto& model : models) {
    if (model.weight != k)
      report.warnings.push_back("model " + to_string(model.kind) + " has weight " + std::to_string(model.weight) +
                                ", lift has weight " + std::to_string(k));
    CaseReport c;
    c.kind = model.kind;
    c.log_moduli = log_moduli(model);
    for (auto& e : c.log_moduli)
      if (std::fabs(e) <= tol) e = 0.0;
    c.has_unit_parameter =
        std::any_of(c.log_moduli.begin(), c.log_moduli.end(), [&](double e) { return std::fabs(e) <= tol; });
    c.orbit_product_exponents = signed_sums(c.log_moduli, tol);
    c.chai_faltings_degree3 = std::any_of(c.orbit_product_exponents.begin(), c.orbit_product_exponents.end(),
                                          [&](double e) { return std::fabs(e) <= tol; });

    // The lifted point always has a unit parameter and a unit orbit product;
    // a model lacking either cannot carry the lifted parameters.
    if (!c.has_unit_parameter) {
      c.refuted = report.lifted_has_unit_parameter;
      c.reason = "no parameter of absolute value one: log_p moduli " + format_exponents(c.log_moduli);
    } else if (!c.chai_faltings_degree3) {
      c.refuted = report.lifted_chai_faltings;
      c.reason = "|mu1 mu2 mu3| takes only the values p^e, e in " + format_exponents(c.orbit_product_exponents) +
                 ", on the Weyl orbit: violates Chai-Faltings in degree 3";
    } else {
      c.refuted = false;
      c.reason = "model moduli are compatible with the lifted parameters";
    }
    all_refuted = all_refuted && c.refuted;
    report.cases.push_back(std::move(c));
  }
  report.cuspidal = all_refuted;
  return report;
}

LiftInput tempered_lift_input(int k, long p) {
  if (k < 4 || k % 2) throw InputError("tempered lift input needs even k >= 4, got " + std::to_string(k));
  const double lp = std::log(static_cast<double>(p));
  const double phi = 1.0, psi1 = 2.0, psi2 = 3.0;
  Complex alpha1 = std::polar(1.0, -2.0 * phi);
  Complex alpha0 = std::polar(std::exp(0.5 * (k - 3) * lp), phi);
  Complex beta1 = std::polar(1.0, psi1);
  Complex beta2 = std::polar(1.0, psi2);
  Complex beta0 = std::polar(std::exp(0.5 * (2 * k - 3) * lp), -0.5 * (psi1 + psi2));
  return LiftInput::make(p, make_satake(1, k - 2, p, alpha0, {alpha1}),
                         make_satake(2, k, p, beta0, {beta1, beta2}));
}

std::vector<EisensteinModel> standard_models(const LiftInput& in, double tol) {
  const int k = in.gsp4_weight();
  const long p = in.prime();
  SatakeParams g = in.gsp4_satake();
  auto rep = chai_faltings_representative(g, tol);
  if (!rep) throw InputError("degree-2 component has no Chai-Faltings representative");
  SatakeParams h = in.gl2_satake();
  return {
      {EisensteinKind::SiegelEisenstein, k, p, {}},
      {EisensteinKind::KlingenFromDegree2, k, p, {rep->mu[0], rep->mu[1]}},
      {EisensteinKind::KlingenFromElliptic, k, p, {h.mu[0]}},
  };
}

}  // namespace spinor
