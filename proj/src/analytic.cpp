#include "spinor/analytic.hpp"

#include "spinor/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace spinor {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::nearbyint(s.real());
}

// log Gamma(s) for Re(s) >= 1/2.
Complex lanczos_log_gamma(Complex s) {
  Complex z = s - 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

void require_even(int k, int min, const char* what) {
  if (k < min || k % 2 != 0)
    throw InputError(std::string(what) + " must be an even integer >= " + std::to_string(min) + ", got " +
                     std::to_string(k));
}

}  // namespace

Complex gamma_fn(Complex s) {
  if (is_nonpositive_integer(s))
    throw DomainError("Gamma has a pole at s=" + std::to_string(static_cast<long>(s.real())));
  if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * std::exp(lanczos_log_gamma(1.0 - s)));
  return std::exp(lanczos_log_gamma(s));
}

Complex gamma_c(Complex s) {
  if (is_nonpositive_integer(s))
    throw DomainError("Gamma_C has a pole at s=" + std::to_string(static_cast<long>(s.real())));
  if (s.real() < 0.5) return 2.0 * std::pow(2.0 * kPi, -s) * gamma_fn(s);
  return 2.0 * std::exp(lanczos_log_gamma(s) - s * std::log(2.0 * kPi));
}

GammaProfile make_gamma_profile(std::vector<int> shifts, Rational prefactor, int two_pi_exponent, int center) {
  if (shifts.empty()) throw InputError("Gamma profile needs at least one factor");
  std::sort(shifts.begin(), shifts.end());
  prefactor.canonicalize();
  return GammaProfile{std::move(shifts), std::move(prefactor), two_pi_exponent, center};
}

bool GammaProfile::finite_at(long m) const {
  return std::all_of(shifts.begin(), shifts.end(), [m](int d) { return m + d >= 1; });
}

Complex GammaProfile::evaluate(Complex s) const {
  Complex value = prefactor.get_d() * std::pow(2.0 * kPi, static_cast<double>(two_pi_exponent));
  for (int d : shifts) value *= gamma_c(s + static_cast<double>(d));
  return value;
}

GammaProfile linf_spin3(int k) {
  require_even(k, 12, "weight k");
  return make_gamma_profile({0, -k + 1, -k + 2, -k + 3}, Rational(1), 0, 3 * k - 5);
}

GammaProfile linf_rankin_selberg(int k1, int k2) {
  require_even(k1, 2, "weight k1");
  require_even(k2, 2, "weight k2");
  if (k1 > k2) throw InputError("Rankin-Selberg profile needs k1 <= k2");
  return make_gamma_profile({0, -k2 + 1, -k2 + 2, -k1 + 1}, Rational(1, 8), 4 - 2 * k2 - k1, k1 + 2 * k2 - 3);
}

std::vector<int> critical_values(int k) {
  GammaProfile profile = linf_spin3(k);
  int reach = std::abs(profile.center);
  for (int d : profile.shifts) reach += std::abs(d);
  std::vector<int> out;
  for (int m = -reach - 1; m <= reach + 1; ++m)
    if (profile.finite_at(m) && profile.finite_at(profile.center - m)) out.push_back(m);

  std::vector<int> expected;
  for (int m = k; m <= 2 * k - 5; ++m) expected.push_back(m);
  if (out != expected)
    throw std::logic_error("critical values from Gamma poles disagree with k..2k-5 at k=" + std::to_string(k));
  return out;
}

int deligne_pi_exponent(int m, int k) { return 4 * m - 3 * k + 6; }

double deligne_normalize(int m, int k, double l_value, double omega) {
  if (!(omega > 0.0)) throw InputError("period Omega must be positive");
  auto crit = critical_values(k);
  if (!std::binary_search(crit.begin(), crit.end(), m))
    throw InputError(std::to_string(m) + " is not a critical integer for k=" + std::to_string(k));
  return l_value / (std::pow(kPi, deligne_pi_exponent(m, k)) * omega);
}

std::optional<double> convergence_abscissa(int n, int k, bool ramanujan, LRepresentation rep) {
  if (n < 1 || n > 3) throw InputError("degree must be 1, 2 or 3");
  if (rep == LRepresentation::Standard) return n + 1.0;
  if (!ramanujan) return std::nullopt;
  switch (n) {
    case 1: return (k + 1) / 2.0;
    case 2: return k - 0.5;
    default: return 1.5 * k - 2.0;
  }
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (long p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (long q = p * p; q <= bound; q += p) composite[q] = true;
  }
  return out;
}

double max_root_ratio(const LocalFactor& f, double theta) {
  int d = f.degree();
  if (d == 0) return 0.0;
  const double log2p = std::log2(static_cast<double>(f.prime()));
  // b_j = c_j p^(-j theta): the factor in Y = p^theta X.
  std::vector<Complex> b(d + 1);
  if (f.is_exact()) {
    const auto& c = f.exact();
    for (int j = 0; j <= d; ++j) {
      if (sgn(c[j]) == 0) continue;
      b[j] = sgn(c[j]) * std::exp2(log2_abs(c[j]) - j * theta * log2p);
    }
  } else {
    const auto& c = f.numeric();
    for (int j = 0; j <= d; ++j) b[j] = c[j] * std::exp2(-j * theta * log2p);
  }
  // Inverse roots are the roots of Y^d + b1 Y^(d-1) + ... + bd.
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) companion(0, j) = -b[j + 1];
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw DomainError("eigenvalue solver failed for the local factor");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

EulerProductResult truncated_euler_product(const FactorProvider& factors, Complex s, long prime_bound,
                                           int motivic_weight, const EulerProductOptions& options) {
  if (prime_bound < 2) throw InputError("prime bound must be at least 2");
  const double theta = 0.5 * motivic_weight;
  const double abscissa = theta + 1.0;
  if (!(s.real() > abscissa + options.margin))
    throw DomainError("Re(s)=" + std::to_string(s.real()) + " is not beyond the abscissa " +
                      std::to_string(abscissa) + " (+" + std::to_string(options.margin) + ")");

  const auto primes = primes_up_to(prime_bound);
  const std::size_t count = primes.size();
  std::vector<Complex> values(count);
  std::vector<int> degrees(count, 0);
  std::vector<std::exception_ptr> errors(count);

  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < count; i += stride) {
      try {
        LocalFactor f = factors(primes[i]);
        if (f.prime() != primes[i])
          throw InputError("provider returned a factor at p=" + std::to_string(f.prime()) + " for p=" +
                           std::to_string(primes[i]));
        double ratio = max_root_ratio(f, theta);
        if (ratio > 1.0 + options.root_tolerance)
          throw DomainError("local factor at p=" + std::to_string(primes[i]) + " has an inverse root of modulus " +
                            std::to_string(ratio) + " * p^" + std::to_string(theta));
        degrees[i] = f.degree();
        values[i] = evaluate(f, s);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || count < 2) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  EulerProductResult result;
  result.value = 1.0;
  for (const auto& v : values) result.value *= v;
  result.prime_bound = prime_bound;
  result.primes_used = static_cast<int>(count);
  result.abscissa = abscissa;
  result.theta = theta;

  const double a = s.real() - theta;
  const double d = *std::max_element(degrees.begin(), degrees.end());
  const double P = static_cast<double>(prime_bound);
  const double x = std::pow(P + 1.0, -a);
  result.log_tail_bound = d / (1.0 - x) * std::pow(P, 1.0 - a) / (a - 1.0);
  result.value_error_bound = std::abs(result.value) * std::expm1(result.log_tail_bound);
  return result;
}

}  // namespace spinor
