#include "spinor/analytic.hpp"
#include "spinor/cuspidality.hpp"
#include "spinor/errors.hpp"
#include "spinor/hodge.hpp"
#include "spinor/lifting.hpp"
#include "spinor/local_factor.hpp"
#include "spinor/modforms.hpp"
#include "spinor/satake.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace spinor;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double time_limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

SatakeParams random_normalized(int n, int k, long p, std::mt19937& rng) {
  std::uniform_real_distribution<double> mod(0.6, 1.6), arg(-3.1, 3.1);
  std::vector<Complex> mu;
  Complex prod = 1.0;
  for (int i = 0; i < n; ++i) {
    mu.push_back(std::polar(mod(rng), arg(rng)));
    prod *= mu.back();
  }
  Complex mu0 = std::sqrt(std::pow(static_cast<double>(p), n * k - n * (n + 1) / 2.0) / prod);
  return make_satake(n, k, p, mu0, mu);
}

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(b), 1e-300); }

bool orbit_invariant(const SatakeParams& sp, std::size_t expected_size) {
  auto orbit = weyl_orbit(sp);
  if (orbit.size() != expected_size) return false;
  Complex lambda = hecke_eigenvalue(sp);
  auto base = spin_local_factor(sp).as_complex();
  for (const auto& x : orbit) {
    if (!close(hecke_eigenvalue(x), lambda, 1e-9)) return false;
    auto f = spin_local_factor(x).as_complex();
    for (std::size_t i = 0; i < base.size(); ++i) {
      double scale = std::max(std::abs(base[i]), std::abs(base.back()) * 1e-30);
      if (std::abs(f[i] - base[i]) > 1e-9 * std::max(scale, 1e-300)) return false;
    }
  }
  return true;
}

Outcome miyawaki() {
  QSeries d = modforms::delta(8);
  QSeries g = modforms::newform_weight26(8);
  Integer tau2 = d.integer_coefficient(2);
  Integer lambda2 = modforms::saito_kurokawa_lambda_p(14, 2, g.integer_coefficient(2));
  Integer product = tau2 * lambda2;
  bool ok = tau2 == -24 && lambda2 == 12240 && product == -293760 && product == -(Integer(1) << 7) * 2295;
  LiftInput in = LiftInput::make(2, Gl2Data{12, tau2},
                                 Gsp4Data{14, lambda2, modforms::saito_kurokawa_lambda_p2(14, 2, g.integer_coefficient(2),
                                                                                           g.integer_coefficient(4))});
  auto lifted = theta_route_factor(in, true);
  ok = ok && lifted.exact()[1] == -product;
  return {ok, "tau(2)=" + tau2.get_str() + ", lambda_2(G)=" + lambda2.get_str() + ", product=" + product.get_str()};
}

Outcome tensor_identity() {
  auto records = modforms::generate_fixture_records({5, 16});
  int exact_ok = 0;
  for (long p : {2L, 3L, 5L})
    if (verify_tensor_identity(lift_input_from_records(records[0], records[2], p), true).holds) ++exact_ok;
  std::mt19937 rng(20240);
  int random_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    long p = std::array<long, 4>{2, 3, 5, 7}[trial % 4];
    int k = 12 + 2 * (trial % 5);
    LiftInput in = LiftInput::make(p, random_normalized(1, k - 2, p, rng), random_normalized(2, k, p, rng));
    if (verify_tensor_identity(in, false).holds) ++random_ok;
  }
  return {exact_ok == 3 && random_ok == 100,
          "exact " + std::to_string(exact_ok) + "/3, random " + std::to_string(random_ok) + "/100"};
}

Outcome weight_rigidity() {
  std::vector<WeightTriple> expected;
  for (int K = 10; K <= 40; K += 2) expected.push_back({K - 2, K, K});
  auto found = weight_solver(8, 40);
  return {found == expected, std::to_string(found.size()) + " triples, family (K-2,K,K)"};
}

Outcome cuspidality() {
  int total = 0, refuted = 0;
  for (int k = 6; k <= 40; k += 2) {
    for (long p : {2L, 3L, 5L, 7L}) {
      LiftInput in = tempered_lift_input(k, p);
      auto report = cuspidality_decision(in, standard_models(in));
      bool shape = report.cases.size() == 3 && !report.cases[0].has_unit_parameter &&
                   report.cases[1].orbit_product_exponents == std::vector<double>{-(k - 3.0), k - 3.0};
      ++total;
      if (report.cuspidal && shape) ++refuted;
    }
  }
  LiftInput boundary = tempered_lift_input(4, 2);
  auto b = cuspidality_decision(boundary, standard_models(boundary));
  bool boundary_ok = b.cuspidal && b.cases[0].chai_faltings_degree3 && !b.cases[0].has_unit_parameter;
  auto delta_sk = cuspidality_decision(LiftInput::make(2, Gl2Data{12, -24}, Gsp4Data{14, 12240, 66521344}),
                                       standard_models(LiftInput::make(2, Gl2Data{12, -24},
                                                                       Gsp4Data{14, 12240, 66521344})));
  return {refuted == total && boundary_ok && delta_sk.cuspidal,
          std::to_string(refuted) + "/" + std::to_string(total) + " (k,p) pairs, k=4 boundary " +
              (boundary_ok ? "ok" : "bad")};
}

Outcome gamma_coherence() {
  int ok = 0, total = 0;
  for (int k = 12; k <= 60; k += 2) {
    ++total;
    auto spin = linf_spin3(k);
    auto rs = linf_rankin_selberg(k - 2, k);
    if (spin.shifts == rs.shifts && spin.center == rs.center && spin.center == 3 * k - 5) ++ok;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " weights"};
}

Outcome critical() {
  int ok = 0, total = 0;
  for (int k = 12; k <= 60; k += 2) {
    ++total;
    std::vector<int> expected;
    for (int m = k; m <= 2 * k - 5; ++m) expected.push_back(m);
    if (critical_values(k) == expected) ++ok;
  }
  auto v = critical_values(14);
  bool k14 = v.size() == 10 && v.front() == 14 && v.back() == 23;
  return {ok == total && k14, std::to_string(ok) + "/" + std::to_string(total) + " weights, k=14 has " +
                                  std::to_string(v.size()) + " values"};
}

Outcome chai_faltings() {
  SatakeParams delta = satake_from_gl2(12, 2, -24);
  SatakeParams sk = satake_from_gsp4(14, 2, 12240, 66521344);
  bool flags = ramanujan_check(delta) && !ramanujan_check(sk) && chai_faltings_test(sk);
  SatakeParams lifted = theta_lift(delta, sk);
  bool orbits = orbit_invariant(delta, 2) && orbit_invariant(sk, 8) && orbit_invariant(lifted, 48);
  std::mt19937 rng(7);
  for (int t = 0; t < 10 && orbits; ++t) orbits = orbit_invariant(random_normalized(3, 14, 3, rng), 48);
  return {flags && orbits, std::string("ramanujan/chai-faltings flags ") + (flags ? "ok" : "bad") +
                               ", orbit invariance " + (orbits ? "ok" : "bad")};
}

Outcome euler_product() {
  auto records = modforms::generate_fixture_records({400, 16});
  FactorProvider lifted = [&](long p) {
    return tensor_route_factor(lift_input_from_records(records[0], records[2], p), true);
  };
  bool ok = true;
  std::string detail;
  for (long P : {50L, 100L, 200L}) {
    auto a = truncated_euler_product(lifted, 23.0, P, 37);
    auto b = truncated_euler_product(lifted, 23.0, 2 * P, 37);
    double diff = std::abs(b.value - a.value);
    ok = ok && diff < a.value_error_bound;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%sP=%ld diff %.2e < %.2e", detail.empty() ? "" : ", ", P, diff,
                  a.value_error_bound);
    detail += buf;
  }
  return {ok, detail};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Miyawaki identity from q-expansions", 1.0, miyawaki},
      {2, "tensor identity exact and numeric", 10.0, tensor_identity},
      {3, "weight rigidity", 0.0, weight_rigidity},
      {4, "cuspidality refutes all Eisenstein models", 0.0, cuspidality},
      {5, "Gamma-profile coherence", 0.0, gamma_coherence},
      {6, "critical values", 0.0, critical},
      {7, "Chai-Faltings, Ramanujan and Weyl-orbit invariance", 0.0, chai_faltings},
      {8, "Euler-product soundness", 5.0, euler_product},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.time_limit == 0.0 || elapsed < c.time_limit;
    bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("criterion %d [%s] %s: %s (%.3f s%s)\n", c.number, pass ? "PASS" : "FAIL", c.title.c_str(),
                o.detail.c_str(), elapsed, in_time ? "" : ", over time limit");
  }
  return failures == 0 ? 0 : 1;
}
