#pragma once

#include "spinor/qseries.hpp"
#include "spinor/satake.hpp"

#include <vector>

namespace spinor::modforms {

inline constexpr std::size_t kDefaultTruncation = 64;

Rational bernoulli(unsigned n);

// sum of d^power over the positive divisors of n.
Integer divisor_sigma(unsigned long n, unsigned power);

/// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
QSeries eisenstein(int weight, std::size_t order);

/// prod_{n>=1} (1 - q^n) via Euler's pentagonal number theorem.
QSeries euler_product(std::size_t order);

/// q prod (1 - q^n)^24.
QSeries delta(std::size_t order);

/// Delta * E_14, the normalized generator of the one-dimensional S_26.
QSeries newform_weight26(std::size_t order);

/// Degree-2 parameters of the Saito-Kurokawa lift of weight k at p, attached
/// to the eigenvalue a_p of the weight 2k-2 elliptic newform:
/// beta0 = p^(k-1), and beta0 beta1, beta0 beta2 the roots of X^2 - a_p X + p^(2k-3).
SatakeParams saito_kurokawa_satake(int weight, long prime, const Integer& a_p);

/// T(p) and T(p^2) eigenvalues of the Saito-Kurokawa lift from a_p and a_{p^2}
/// of the elliptic newform of weight 2k-2.
Integer saito_kurokawa_lambda_p(int weight, long prime, const Integer& a_p);
Integer saito_kurokawa_lambda_p2(int weight, long prime, const Integer& a_p, const Integer& a_p2);

struct FixtureConfig {
  long prime_bound = 50;
  std::size_t truncation = kDefaultTruncation;
};

/// Delta.12.1, g26.26.1 and SK.14.2, generated from the q-expansions above.
/// The series are extended to cover every prime up to the bound; a_{p^2}
/// is read from the series when p^2 is within the truncation and from the
/// Hecke recursion a_{p^2} = a_p^2 - p^(k-1) otherwise.
std::vector<EigenvalueRecord> generate_fixture_records(const FixtureConfig& config);

}  // namespace spinor::modforms
