#include "spinor/errors.hpp"
#include "spinor/modforms.hpp"
#include "spinor/satake.hpp"

#include <doctest.h>

#include <random>

using namespace spinor;

namespace {

SatakeParams random_normalized(int n, int k, long p, std::mt19937& rng) {
  std::uniform_real_distribution<double> mod(0.5, 2.0), arg(-3.1, 3.1);
  std::vector<Complex> mu;
  Complex prod = 1.0;
  for (int i = 0; i < n; ++i) {
    mu.push_back(std::polar(mod(rng), arg(rng)));
    prod *= mu.back();
  }
  double e = n * k - n * (n + 1) / 2.0;
  Complex mu0 = std::sqrt(std::pow(static_cast<double>(p), e) / prod);
  return make_satake(n, k, p, mu0, mu);
}

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("Satake points validate degree, length and nonzero entries") {
  CHECK_THROWS_AS(make_satake(4, 12, 2, 1.0, {1.0, 1.0, 1.0, 1.0}), InputError);
  CHECK_THROWS_AS(make_satake(2, 12, 2, 1.0, {1.0}), InputError);
  CHECK_THROWS_AS(make_satake(1, 12, 2, 0.0, {1.0}), InputError);
  CHECK_THROWS_AS(make_satake(1, 12, 2, 1.0, {0.0}), InputError);
  CHECK(make_satake(3, 14, 2, 1.0, {1.0, 1.0, 1.0}).normalization_exponent() == 36);
}

TEST_CASE("Weyl groups have 2^n n! signed permutations, identity first") {
  CHECK(weyl_group(1).size() == 2);
  CHECK(weyl_group(2).size() == 8);
  CHECK(weyl_group(3).size() == 48);
  CHECK(weyl_group(3).front().is_identity());
  CHECK_THROWS_AS(weyl_group(4), InputError);
}

TEST_CASE("Weyl composition is an action and the group is closed") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 3; ++n) {
    auto group = weyl_group(n);
    SatakeParams x = random_normalized(n, 14, 3, rng);
    for (const auto& a : group) {
      for (const auto& b : group) {
        WeylElement c = compose(a, b);
        CHECK(std::find(group.begin(), group.end(), c) != group.end());
        SatakeParams lhs = weyl_apply(c, x);
        SatakeParams rhs = weyl_apply(a, weyl_apply(b, x));
        CHECK(close(lhs.mu0, rhs.mu0, 1e-12));
        for (int i = 0; i < n; ++i) CHECK(close(lhs.mu[i], rhs.mu[i], 1e-12));
      }
    }
  }
}

TEST_CASE("Weyl orbit preserves normalization and the Hecke eigenvalue") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + trial % 3;
    SatakeParams x = random_normalized(n, 12 + 2 * (trial % 5), 2 + (trial % 2), rng);
    REQUIRE(check_normalization(x));
    Complex lambda = hecke_eigenvalue(x);
    for (const auto& y : weyl_orbit(x)) {
      CHECK(check_normalization(y));
      CHECK(close(hecke_eigenvalue(y), lambda, 1e-9));
    }
  }
}

TEST_CASE("unnormalized all-ones point has eigenvalue 2^n") {
  for (int n = 1; n <= 3; ++n) {
    SatakeParams x = make_satake(n, 0, 2, 1.0, std::vector<Complex>(n, 1.0));
    CHECK(hecke_eigenvalue(x) == Complex(1 << n, 0.0));
  }
}

TEST_CASE("elliptic parameters of Delta at 2") {
  SatakeParams d = satake_from_gl2(12, 2, -24);
  CHECK(close(hecke_eigenvalue(d), -24.0, 1e-12));
  CHECK(check_normalization(d));
  CHECK(ramanujan_check(d));
  CHECK(d.mu0.imag() >= 0.0);
}

TEST_CASE("degree-2 parameters from T(p), T(p^2) reproduce lambda_p") {
  for (long p : {2L, 3L, 5L, 7L}) {
    Integer a = modforms::newform_weight26(60).integer_coefficient(p);
    Integer a2 = modforms::newform_weight26(60).integer_coefficient(p * p);
    Integer l = modforms::saito_kurokawa_lambda_p(14, p, a);
    Integer l2 = modforms::saito_kurokawa_lambda_p2(14, p, a, a2);
    SatakeParams g = satake_from_gsp4(14, p, l, l2);
    CHECK(check_normalization(g));
    CHECK(close(hecke_eigenvalue(g), to_double(l), 1e-9));
    CHECK_FALSE(ramanujan_check(g));
  }
  CHECK(close(hecke_eigenvalue(satake_from_gsp4(14, 2, 12240, 66521344)), 12240.0, 1e-12));
}

TEST_CASE("eigenvalue records look up primes and validate order") {
  EigenvalueRecord r{"x", 1, 12, {{2, -24, std::nullopt}, {3, 252, std::nullopt}}};
  CHECK_NOTHROW(r.validate());
  CHECK(r.at(3).lambda_p == 252);
  CHECK(r.find(5) == nullptr);
  CHECK_THROWS_AS(r.at(5), InputError);
  EigenvalueRecord bad{"y", 1, 12, {{3, 1, std::nullopt}, {2, 1, std::nullopt}}};
  CHECK_THROWS_AS(bad.validate(), InputError);
  EigenvalueRecord composite{"z", 1, 12, {{4, 1, std::nullopt}}};
  CHECK_THROWS_AS(composite.validate(), InputError);
}
