#pragma once

#include "spinor/integer.hpp"
#include "spinor/satake.hpp"

#include <string>
#include <variant>
#include <vector>

namespace spinor {

/// Local L-factor det(1 - r(t_p) X) with X = p^(-s), as a polynomial with
/// constant term 1. Exact factors carry big integers; numeric factors carry
/// complex doubles. The two modes never mix inside one value.
class LocalFactor {
 public:
  using ExactCoeffs = std::vector<Integer>;
  using NumericCoeffs = std::vector<Complex>;

  LocalFactor(long prime, std::string rep, ExactCoeffs coeffs);
  LocalFactor(long prime, std::string rep, NumericCoeffs coeffs);

  long prime() const { return prime_; }
  int degree() const;
  const std::string& rep() const { return rep_; }
  bool is_exact() const { return std::holds_alternative<ExactCoeffs>(coeffs_); }

  // Throw InputError on the wrong mode.
  const ExactCoeffs& exact() const;
  const NumericCoeffs& numeric() const;

  // Complex view of either mode (exact coefficients rounded to double).
  NumericCoeffs as_complex() const;

  friend bool operator==(const LocalFactor&, const LocalFactor&) = default;

 private:
  long prime_;
  std::string rep_;
  std::variant<ExactCoeffs, NumericCoeffs> coeffs_;
};

std::string spin_rep(int n);
std::string standard_rep(int n);
inline const std::string kTensorRep = "tensor";

/// prod_{S subset {1..n}} (1 - mu0 prod_{i in S} mu_i X), degree 2^n.
LocalFactor spin_local_factor(const SatakeParams& sp);
/// (1 - X) prod_j (1 - mu_j X)(1 - mu_j^-1 X), degree 2n+1.
LocalFactor standard_local_factor(const SatakeParams& sp);

/// Inverse roots of the spin factor, in subset order (bit i of the index selects mu_{i+1}).
std::vector<Complex> spin_inverse_roots(const SatakeParams& sp);

LocalFactor gl2_factor_exact(int weight, long prime, const Integer& a_p);

/// 1 - l1 X + (l1^2 - l2 - p^(2k-4)) X^2 - l1 p^(2k-3) X^3 + p^(4k-6) X^4.
LocalFactor gsp4_spin_factor_exact(int weight, long prime, const Integer& lambda_p, const Integer& lambda_p2);

/// det(1 - (C_A (x) C_B) X) for the reversed companion matrices of A and B.
/// Both factors must share the prime and the mode; exact inputs give an
/// exact result with no root extraction.
LocalFactor tensor_local_factor(const LocalFactor& a, const LocalFactor& b);

/// Expand prod (1 - r X).
LocalFactor::NumericCoeffs expand_inverse_roots(const std::vector<Complex>& roots);

/// Polynomial value f(p^-s). Exact coefficients are combined in log scale so
/// large primes and weights do not overflow.
Complex factor_value(const LocalFactor& f, Complex s);

/// Reciprocal 1/f(p^-s). Throws DomainError at a zero of f.
Complex evaluate(const LocalFactor& f, Complex s);

}  // namespace spinor
