#pragma once

#include "spinor/integer.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace spinor {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

/// A point (mu0; mu1, ..., mun) on the maximal torus of the dual group of
/// GSp(2n), attached to an unramified local representation of weight k at p.
///
/// The similitude normalization mu0^2 * mu1 * ... * mun = p^(nk - n(n+1)/2)
/// is a checked property (check_normalization), not a construction-time
/// requirement, so that deliberately unnormalized points (all-ones test
/// points, perturbed inputs) stay representable.
struct SatakeParams {
  int degree = 1;
  int weight = 0;
  long prime = 2;
  Complex mu0{1.0, 0.0};
  std::vector<Complex> mu;

  // Throws InputError unless degree is 1..3, mu has `degree` entries and no entry is zero.
  void validate() const;

  // Exponent nk - n(n+1)/2 of the normalization.
  int normalization_exponent() const;
};

SatakeParams make_satake(int degree, int weight, long prime, Complex mu0, std::vector<Complex> mu);

/// Signed permutation of {1..n}. Acting on a point, entry i of the image is
/// mu_{perm[i]}, inverted when i is flipped; every flip multiplies mu0 by the
/// pre-inversion value.
struct WeylElement {
  std::vector<int> perm;     // 0-based image indices
  std::vector<bool> flip;    // flip[i]: inverse taken at output slot i

  static WeylElement identity(int n);
  int rank() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;
  bool operator==(const WeylElement&) const = default;
};

// Composition: apply(compose(a, b), x) == apply(a, apply(b, x)).
WeylElement compose(const WeylElement& a, const WeylElement& b);

// All 2^n * n! elements, identity first.
std::vector<WeylElement> weyl_group(int n);

SatakeParams weyl_apply(const WeylElement& w, const SatakeParams& sp);
std::vector<SatakeParams> weyl_orbit(const SatakeParams& sp);

bool check_normalization(const SatakeParams& sp, double tol = kDefaultTolerance);

/// Spin trace mu0 * prod_i (1 + mu_i); the T(p) eigenvalue of a degree-n
/// Siegel eigenform under the standard normalization.
Complex hecke_eigenvalue(const SatakeParams& sp);

bool ramanujan_check(const SatakeParams& sp, double tol = kDefaultTolerance);

/// Parameters of an elliptic eigenform: alpha0 and alpha0*alpha1 are the roots
/// of X^2 - a_p X + p^(k-1); alpha0 is the root with nonnegative imaginary part.
SatakeParams satake_from_gl2(int weight, long prime, const Integer& a_p);

/// Degree-2 parameters from the eigenvalues of T(p) and T(p^2), by splitting
/// the Andrianov quartic into its two reciprocal quadratics.
SatakeParams satake_from_gsp4(int weight, long prime, const Integer& lambda_p, const Integer& lambda_p2);

struct EigenvalueEntry {
  long p = 2;
  Integer lambda_p;
  std::optional<Integer> lambda_p2;
};

/// Hecke eigenvalues of one eigenform, keyed by increasing primes.
struct EigenvalueRecord {
  std::string label;
  int degree = 1;
  int weight = 0;
  std::vector<EigenvalueEntry> eigenvalues;

  // Throws InputError if primes are not strictly increasing or not prime.
  void validate() const;
  const EigenvalueEntry* find(long p) const;
  // Throws InputError when the prime is missing.
  const EigenvalueEntry& at(long p) const;
};

}  // namespace spinor
