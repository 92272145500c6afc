#include "spinor/modforms.hpp"

#include "spinor/errors.hpp"

#include <algorithm>
#include <string>

namespace spinor::modforms {

Rational bernoulli(unsigned n) {
  // Akiyama-Tanigawa; yields B_1 = +1/2, irrelevant for the even indices used here.
  std::vector<Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
  }
  return a[0];
}

Integer divisor_sigma(unsigned long n, unsigned power) {
  Integer total = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    total += ipow(static_cast<long>(d), power);
    if (d != n / d) total += ipow(static_cast<long>(n / d), power);
  }
  return total;
}

QSeries eisenstein(int weight, std::size_t order) {
  if (weight < 4 || weight % 2)
    throw InputError("Eisenstein series needs an even weight >= 4, got " + std::to_string(weight));
  Rational factor = Rational(-2 * weight) / bernoulli(static_cast<unsigned>(weight));
  factor.canonicalize();
  // numerators over den: c(0) = den, c(n) = num * sigma_{k-1}(n).
  const Integer& num = factor.get_num();
  const Integer& den = factor.get_den();
  std::vector<Integer> coeffs(order + 1);
  coeffs[0] = den;
  for (std::size_t n = 1; n <= order; ++n)
    coeffs[n] = num * divisor_sigma(n, static_cast<unsigned>(weight - 1));
  return QSeries(std::move(coeffs), den);
}

QSeries euler_product(std::size_t order) {
  std::vector<Integer> coeffs(order + 1);
  coeffs[0] = 1;
  // Generalized pentagonal exponents m(3m-1)/2 for m = 1, -1, 2, -2, ...
  for (long m = 1;; ++m) {
    bool any = false;
    for (long e : {m * (3 * m - 1) / 2, m * (3 * m + 1) / 2}) {
      if (static_cast<std::size_t>(e) > order) continue;
      coeffs[e] += (m % 2) ? -1 : 1;
      any = true;
    }
    if (!any) break;
  }
  return QSeries(std::move(coeffs));
}

QSeries delta(std::size_t order) {
  if (order < 2) throw InputError("delta needs truncation order >= 2");
  // f = E^24 for the sparse series E = prod (1 - q^n), by the recurrence
  // n f(n) = sum_{j>=1} (25 j - n) e(j) f(n - j).
  QSeries eta = euler_product(order - 1);
  std::vector<std::size_t> support;
  for (std::size_t j = 1; j <= eta.order(); ++j)
    if (sgn(eta.numerators()[j]) != 0) support.push_back(j);
  std::vector<Integer> f(order);
  f[0] = 1;
  for (std::size_t n = 1; n < order; ++n) {
    Integer acc = 0;
    for (std::size_t j : support) {
      if (j > n) break;
      long w = 25 * static_cast<long>(j) - static_cast<long>(n);
      acc += w * eta.numerators()[j] * f[n - j];
    }
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), n);
    f[n] = std::move(acc);
  }
  std::vector<Integer> coeffs(order + 1);
  for (std::size_t n = 1; n <= order; ++n) coeffs[n] = std::move(f[n - 1]);
  return QSeries(std::move(coeffs));
}

QSeries newform_weight26(std::size_t order) {
  if (order < 2) throw InputError("newform needs truncation order >= 2");
  QSeries g = delta(order) * eisenstein(14, order);
  Rational lead = g.coefficient(1);
  return g * Rational(lead.get_den(), lead.get_num());
}

SatakeParams saito_kurokawa_satake(int weight, long prime, const Integer& a_p) {
  SatakeParams gl2 = satake_from_gl2(2 * weight - 2, prime, a_p);
  // gl2 roots: alpha0 and alpha0*alpha1, product p^(2k-3).
  Complex r1 = gl2.mu0;
  Complex r2 = gl2.mu0 * gl2.mu[0];
  double beta0 = to_double(ipow(prime, weight - 1));
  return make_satake(2, weight, prime, beta0, {r1 / beta0, r2 / beta0});
}

Integer saito_kurokawa_lambda_p(int weight, long prime, const Integer& a_p) {
  return a_p + ipow(prime, weight - 1) + ipow(prime, weight - 2);
}

Integer saito_kurokawa_lambda_p2(int weight, long prime, const Integer& a_p, const Integer& a_p2) {
  return a_p2 + ipow(prime, 2 * weight - 3) + a_p * (ipow(prime, weight - 1) + ipow(prime, weight - 2)) +
         ipow(prime, 2 * weight - 2);
}

namespace {

struct EllipticSource {
  const QSeries* series;
  int weight;

  Integer a(std::size_t n) const { return series->integer_coefficient(n); }

  Integer a_square(long p) const {
    auto pp = static_cast<std::size_t>(p) * static_cast<std::size_t>(p);
    if (pp <= series->order()) return a(pp);
    Integer ap = a(static_cast<std::size_t>(p));
    return ap * ap - ipow(p, weight - 1);
  }
};

}  // namespace

std::vector<EigenvalueRecord> generate_fixture_records(const FixtureConfig& config) {
  if (config.prime_bound < 2) throw InputError("prime bound must be at least 2");
  std::size_t order = std::max<std::size_t>(
      {config.truncation, static_cast<std::size_t>(config.prime_bound), 2});
  QSeries d = delta(order);
  QSeries e14 = eisenstein(14, order);
  EllipticSource delta_src{&d, 12};
  // Delta * E_14 has leading coefficient 1, so its coefficients are a_n(g26) directly.
  auto g_coeff = [&](std::size_t n) { return product_coefficient(d, e14, n).get_num(); };
  auto g_square = [&](long p) {
    auto pp = static_cast<std::size_t>(p) * static_cast<std::size_t>(p);
    if (pp <= order) return g_coeff(pp);
    Integer ap = g_coeff(static_cast<std::size_t>(p));
    return Integer(ap * ap - ipow(p, 25));
  };

  EigenvalueRecord rd{"Delta.12.1", 1, 12, {}};
  EigenvalueRecord rg{"g26.26.1", 1, 26, {}};
  EigenvalueRecord rsk{"SK.14.2", 2, 14, {}};
  for (long p = 2; p <= config.prime_bound; ++p) {
    if (!is_prime(p)) continue;
    auto n = static_cast<std::size_t>(p);
    rd.eigenvalues.push_back({p, delta_src.a(n), delta_src.a_square(p)});
    Integer gp = g_coeff(n);
    Integer gp2 = g_square(p);
    rg.eigenvalues.push_back({p, gp, gp2});
    rsk.eigenvalues.push_back(
        {p, saito_kurokawa_lambda_p(14, p, gp), saito_kurokawa_lambda_p2(14, p, gp, gp2)});
  }
  return {rd, rg, rsk};
}

}  // namespace spinor::modforms
