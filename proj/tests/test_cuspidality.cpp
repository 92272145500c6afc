#include "spinor/cuspidality.hpp"
#include "spinor/errors.hpp"

#include <doctest.h>

using namespace spinor;

namespace {

LiftInput delta_sk2() { return LiftInput::make(2, Gl2Data{12, -24}, Gsp4Data{14, 12240, 66521344}); }

}  // namespace

TEST_CASE("Eisenstein templates have the expected moduli") {
  EisensteinModel siegel{EisensteinKind::SiegelEisenstein, 14, 3, {}};
  CHECK(log_moduli(siegel) == std::vector<double>{11, 12, 13});
  SatakeParams sp = eisenstein_params(siegel);
  CHECK(check_normalization(sp, 1e-9));
  CHECK(std::abs(std::abs(sp.mu[2]) - std::pow(3.0, 13)) < 1e-3);

  EisensteinModel klingen2{EisensteinKind::KlingenFromDegree2, 14, 3, {Complex(0.0, 1.0), 1.0}};
  auto m = log_moduli(klingen2);
  CHECK(std::abs(m[0]) < 1e-12);
  CHECK(m[2] == 11);
  CHECK(check_normalization(eisenstein_params(klingen2), 1e-9));

  EisensteinModel klingen1{EisensteinKind::KlingenFromElliptic, 14, 3, {}};
  CHECK_THROWS_AS(log_moduli(klingen1), InputError);
  klingen1.gamma = {1.0};
  CHECK(log_moduli(klingen1) == std::vector<double>{0, 12, 11});
}

TEST_CASE("Chai-Faltings needs k > n") {
  SatakeParams x = make_satake(3, 3, 2, 1.0, {1.0, 1.0, 1.0});
  CHECK_THROWS_AS(chai_faltings_test(x), InputError);
  SatakeParams y = make_satake(3, 4, 2, 1.0, {1.0, 1.0, 1.0});
  CHECK(chai_faltings_test(y));
}

TEST_CASE("Saito-Kurokawa parameters pass Chai-Faltings without Ramanujan") {
  SatakeParams g = satake_from_gsp4(14, 2, 12240, 66521344);
  CHECK_FALSE(ramanujan_check(g));
  CHECK(chai_faltings_test(g));
  auto rep = chai_faltings_representative(g);
  REQUIRE(rep.has_value());
  CHECK(std::abs(std::abs(rep->mu[0] * rep->mu[1]) - 1.0) < 1e-9);
}

TEST_CASE("the Delta x SK lift refutes every model") {
  LiftInput in = delta_sk2();
  CHECK(lifted_mu_constraint(in));
  auto report = cuspidality_decision(in, standard_models(in));
  CHECK(report.cuspidal);
  CHECK(report.lifted_chai_faltings);
  REQUIRE(report.cases.size() == 3);
  for (const auto& c : report.cases) {
    CHECK(c.refuted);
    CHECK_FALSE(c.reason.empty());
  }
  // degree-2 Klingen data from the non-tempered component has moduli p^(+-1/2)
  CHECK(std::abs(std::abs(report.cases[1].log_moduli[0]) - 0.5) < 1e-9);
  CHECK_FALSE(report.cases[1].has_unit_parameter);
}

TEST_CASE("tempered lifts refute all three models for k in 6..40") {
  for (int k = 6; k <= 40; k += 2) {
    for (long p : {2L, 3L, 5L, 7L}) {
      LiftInput in = tempered_lift_input(k, p);
      auto report = cuspidality_decision(in, standard_models(in));
      CHECK(report.cuspidal);
      REQUIRE(report.cases.size() == 3);
      CHECK_FALSE(report.cases[0].has_unit_parameter);
      CHECK(report.cases[1].has_unit_parameter);
      CHECK_FALSE(report.cases[1].chai_faltings_degree3);
      CHECK(report.cases[1].orbit_product_exponents == std::vector<double>{-(k - 3.0), k - 3.0});
      CHECK(report.cases[2].has_unit_parameter);
      CHECK_FALSE(report.cases[2].chai_faltings_degree3);
      for (const auto& c : report.cases) CHECK(c.refuted);
    }
  }
}

TEST_CASE("at k = 4 the Siegel template passes Chai-Faltings but has no unit parameter") {
  LiftInput in = tempered_lift_input(4, 2);
  auto report = cuspidality_decision(in, standard_models(in));
  const auto& siegel = report.cases[0];
  CHECK(siegel.log_moduli == std::vector<double>{1, 2, 3});
  CHECK(siegel.chai_faltings_degree3);
  CHECK_FALSE(siegel.has_unit_parameter);
  CHECK(siegel.refuted);
  CHECK(report.cuspidal);
}

TEST_CASE("a model compatible with the lift blocks the verdict") {
  LiftInput in = tempered_lift_input(12, 3);
  double pk = std::pow(3.0, 9);
  EisensteinModel fake{EisensteinKind::KlingenFromDegree2, 12, 3, {Complex(pk, 0.0), 1.0}};
  auto report = cuspidality_decision(in, {fake});
  CHECK_FALSE(report.cuspidal);
  CHECK_FALSE(report.cases[0].refuted);
}

TEST_CASE("no models is vacuously cuspidal with a warning") {
  auto report = cuspidality_decision(delta_sk2(), {});
  CHECK(report.cuspidal);
  CHECK_FALSE(report.warnings.empty());
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(tempered_lift_input(5, 2), InputError);
  CHECK_THROWS_AS(tempered_lift_input(14, 4), InputError);
  EisensteinModel bad{EisensteinKind::SiegelEisenstein, 14, 4, {}};
  CHECK_THROWS_AS(log_moduli(bad), InputError);
}
