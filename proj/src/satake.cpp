#include "spinor/satake.hpp"

#include "spinor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace spinor {

namespace {

// Roots of Y^2 - b*Y + c, larger-magnitude root first (computed without cancellation).
std::pair<Complex, Complex> reciprocal_quadratic_roots(Complex b, Complex c) {
  Complex disc = std::sqrt(b * b - 4.0 * c);
  Complex plus = b + disc;
  Complex minus = b - disc;
  Complex big = (std::abs(plus) >= std::abs(minus) ? plus : minus) / 2.0;
  if (big == Complex{0.0, 0.0}) return {big, big};
  return {big, c / big};
}

}  // namespace

void SatakeParams::validate() const {
  if (degree < 1 || degree > 3)
    throw InputError("Satake degree must be 1, 2 or 3, got " + std::to_string(degree));
  if (static_cast<int>(mu.size()) != degree)
    throw InputError("Satake point of degree " + std::to_string(degree) + " has " +
                     std::to_string(mu.size()) + " entries");
  if (mu0 == Complex{0.0, 0.0}) throw InputError("Satake parameter mu0 is zero");
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] == Complex{0.0, 0.0})
      throw InputError("Satake parameter mu" + std::to_string(i + 1) + " is zero");
}

int SatakeParams::normalization_exponent() const {
  return degree * weight - degree * (degree + 1) / 2;
}

SatakeParams make_satake(int degree, int weight, long prime, Complex mu0, std::vector<Complex> mu) {
  SatakeParams sp{degree, weight, prime, mu0, std::move(mu)};
  sp.validate();
  return sp;
}

WeylElement WeylElement::identity(int n) {
  WeylElement w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.flip.assign(n, false);
  return w;
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (perm[i] != i || flip[i]) return false;
  return true;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  if (a.rank() != b.rank()) throw InputError("composing Weyl elements of different rank");
  WeylElement c;
  int n = a.rank();
  c.perm.resize(n);
  c.flip.resize(n);
  for (int i = 0; i < n; ++i) {
    c.perm[i] = b.perm[a.perm[i]];
    c.flip[i] = a.flip[i] != b.flip[a.perm[i]];
  }
  return c;
}

std::vector<WeylElement> weyl_group(int n) {
  if (n < 1 || n > 3) throw InputError("Weyl group rank must be 1, 2 or 3");
  std::vector<WeylElement> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      WeylElement w;
      w.perm = perm;
      w.flip.resize(n);
      for (int i = 0; i < n; ++i) w.flip[i] = (mask >> i) & 1u;
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SatakeParams weyl_apply(const WeylElement& w, const SatakeParams& sp) {
  if (w.rank() != sp.degree) throw InputError("Weyl element rank does not match Satake degree");
  SatakeParams out = sp;
  for (int i = 0; i < sp.degree; ++i) {
    Complex value = sp.mu[w.perm[i]];
    if (w.flip[i]) {
      out.mu0 *= value;
      value = 1.0 / value;
    }
    out.mu[i] = value;
  }
  return out;
}

std::vector<SatakeParams> weyl_orbit(const SatakeParams& sp) {
  sp.validate();
  std::vector<SatakeParams> orbit;
  for (const auto& w : weyl_group(sp.degree)) orbit.push_back(weyl_apply(w, sp));
  return orbit;
}

bool check_normalization(const SatakeParams& sp, double tol) {
  sp.validate();
  // (mu0 / p^(e/2))^2 * prod mu_i == 1, evaluated without forming p^e.
  double half = 0.5 * sp.normalization_exponent();
  Complex scaled = sp.mu0 * std::pow(static_cast<double>(sp.prime), -half);
  Complex ratio = scaled * scaled;
  for (const auto& m : sp.mu) ratio *= m;
  return std::abs(ratio - 1.0) <= tol;
}

Complex hecke_eigenvalue(const SatakeParams& sp) {
  Complex value = sp.mu0;
  for (const auto& m : sp.mu) value *= (1.0 + m);
  return value;
}

bool ramanujan_check(const SatakeParams& sp, double tol) {
  sp.validate();
  return std::all_of(sp.mu.begin(), sp.mu.end(),
                     [tol](Complex m) { return std::fabs(std::abs(m) - 1.0) <= tol; });
}

SatakeParams satake_from_gl2(int weight, long prime, const Integer& a_p) {
  if (weight < 1) throw InputError("weight must be positive");
  Integer norm = ipow(prime, weight - 1);
  Integer disc = a_p * a_p - 4 * norm;
  double a = to_double(a_p);
  double root = std::sqrt(std::fabs(to_double(disc)));
  Complex r1, r2;
  if (sgn(disc) < 0) {
    r1 = Complex{a / 2.0, root / 2.0};
    r2 = std::conj(r1);
  } else {
    double big = (a >= 0 ? a + root : a - root) / 2.0;
    r1 = big;
    r2 = to_double(norm) / big;
  }
  // alpha0 * (alpha0 alpha1) = p^(k-1) and alpha0 + alpha0 alpha1 = a_p.
  Complex alpha1 = r2 / r1;
  return make_satake(1, weight, prime, r1, {alpha1});
}

SatakeParams satake_from_gsp4(int weight, long prime, const Integer& lambda_p, const Integer& lambda_p2) {
  if (weight < 2) throw InputError("weight must be at least 2");
  Integer norm = ipow(prime, 2 * weight - 3);
  Integer c2 = lambda_p * lambda_p - lambda_p2 - ipow(prime, 2 * weight - 4);
  // Inverse roots pair up as {b0, b0 b1 b2} and {b0 b1, b0 b2}; each pair has
  // product p^(2k-3) and the pair sums s1, s2 solve T^2 - lambda T + (c2 - 2P).
  Complex lam = to_double(lambda_p);
  Complex p_norm = to_double(norm);
  auto [s1, s2] = reciprocal_quadratic_roots(lam, to_double(c2) - 2.0 * p_norm);
  auto [b0, b0b1b2] = reciprocal_quadratic_roots(s1, p_norm);
  auto [b0b1, b0b2] = reciprocal_quadratic_roots(s2, p_norm);
  (void)b0b1b2;
  return make_satake(2, weight, prime, b0, {b0b1 / b0, b0b2 / b0});
}

void EigenvalueRecord::validate() const {
  if (degree < 1 || degree > 3) throw InputError("record '" + label + "': degree must be 1..3");
  if (weight < 1) throw InputError("record '" + label + "': weight must be positive");
  long last = 0;
  for (const auto& e : eigenvalues) {
    if (!is_prime(e.p)) throw InputError("record '" + label + "': " + std::to_string(e.p) + " is not prime");
    if (e.p <= last) throw InputError("record '" + label + "': primes must be strictly increasing");
    last = e.p;
  }
}

const EigenvalueEntry* EigenvalueRecord::find(long p) const {
  auto it = std::lower_bound(eigenvalues.begin(), eigenvalues.end(), p,
                             [](const EigenvalueEntry& e, long q) { return e.p < q; });
  return (it != eigenvalues.end() && it->p == p) ? &*it : nullptr;
}

const EigenvalueEntry& EigenvalueRecord::at(long p) const {
  if (const auto* e = find(p)) return *e;
  throw InputError("record '" + label + "' has no entry for p=" + std::to_string(p));
}

}  // namespace spinor
