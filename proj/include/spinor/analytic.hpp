#pragma once

#include "spinor/integer.hpp"
#include "spinor/local_factor.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace spinor {

/// Gamma(s) for complex s (Lanczos, g = 7, with reflection for Re(s) < 1/2).
/// Throws DomainError at the poles 0, -1, -2, ...
Complex gamma_fn(Complex s);

/// Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s).
Complex gamma_c(Complex s);

/// prod_i Gamma_C(s + d_i), scaled by rational * (2 pi)^exponent, with the
/// center c of the functional equation s -> c - s.
struct GammaProfile {
  std::vector<int> shifts;  // sorted ascending
  Rational prefactor{1};
  int two_pi_exponent = 0;
  int center = 0;

  /// No Gamma factor has a pole at the integer m.
  bool finite_at(long m) const;
  Complex evaluate(Complex s) const;
  friend bool operator==(const GammaProfile&, const GammaProfile&) = default;
};

GammaProfile make_gamma_profile(std::vector<int> shifts, Rational prefactor, int two_pi_exponent, int center);

/// Gamma_C(s) prod_{m=1..3} Gamma_C(s - k + m), center 3k - 5. Needs even k >= 12.
GammaProfile linf_spin3(int k);

/// 2^-3 (2 pi)^(4 - 2 k2 - k1) Gamma_C(s) Gamma_C(s - k2 + 1) Gamma_C(s - k2 + 2) Gamma_C(s - k1 + 1),
/// center k1 + 2 k2 - 3. Needs even 0 < k1 <= k2.
GammaProfile linf_rankin_selberg(int k1, int k2);

/// Integers m where the profile of linf_spin3(k) is finite at m and at 3k - 5 - m.
/// The result is checked against k..2k-5; a mismatch throws std::logic_error.
std::vector<int> critical_values(int k);

/// Power of pi in the normalization: 4m - 3k + 6.
int deligne_pi_exponent(int m, int k);

/// L / (pi^(4m - 3k + 6) Omega). Throws InputError unless m is critical and Omega > 0.
double deligne_normalize(int m, int k, double l_value, double omega);

enum class LRepresentation { Spin, Standard };

/// Right half-plane of absolute convergence, Re(s) > c.
///   spin, tempered:  c1 = (k+1)/2, c2 = k - 1/2, c3 = 3k/2 - 2
///   standard:        n + 1
/// No bound is known for a non-tempered spin L-function (nullopt).
std::optional<double> convergence_abscissa(int n, int k, bool ramanujan,
                                           LRepresentation rep = LRepresentation::Spin);

inline constexpr double kAbscissaMargin = 1e-6;
inline constexpr double kRootModulusTolerance = 1e-6;

/// Largest |r| / p^theta over the inverse roots r of the factor.
double max_root_ratio(const LocalFactor& f, double theta);

struct EulerProductResult {
  Complex value;
  long prime_bound = 2;
  int primes_used = 0;
  double log_tail_bound = 0.0;    // bound on |log L - log L_P|
  double value_error_bound = 0.0; // bound on |L - L_P|
  double abscissa = 0.0;          // theta + 1
  double theta = 0.0;             // assumed bound |r| <= p^theta
};

using FactorProvider = std::function<LocalFactor(long)>;

struct EulerProductOptions {
  double margin = kAbscissaMargin;
  double root_tolerance = kRootModulusTolerance;
  unsigned threads = 1;
};

/// prod_{p <= P} 1 / f_p(p^-s) with a rigorous bound on the omitted primes.
/// Inverse roots are assumed bounded by p^theta with theta = w/2 for the
/// motivic weight w (3k - 6 for a tempered degree-3 spin factor); every
/// provided factor is checked against it. The tail is bounded by
/// d / (1 - x) * P^(1-a) / (a-1) with a = Re(s) - theta, x = (P+1)^(-a) and
/// d the factor degree. Per-prime values may be computed concurrently; they
/// are multiplied in ascending prime order.
/// Throws DomainError when Re(s) <= theta + 1 + margin or a factor breaks the root bound.
EulerProductResult truncated_euler_product(const FactorProvider& factors, Complex s, long prime_bound,
                                           int motivic_weight, const EulerProductOptions& options = {});

std::vector<long> primes_up_to(long bound);

}  // namespace spinor
