#include "spinor/exact_satake.hpp"

#include "spinor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinor::exact {

QuadraticTower::QuadraticTower(std::vector<Integer> radicands) : radicands_(std::move(radicands)) {
  for (const auto& d : radicands_)
    if (is_perfect_square(d)) throw InputError("tower radicand " + to_decimal(d) + " is a perfect square");
}

TowerElement::TowerElement(TowerPtr tower, const Rational& value)
    : tower_(std::move(tower)), c_(tower_->dimension(), Rational(0)) {
  c_[0] = value;
}

TowerElement::TowerElement(TowerPtr tower, std::vector<Rational> coeffs)
    : tower_(std::move(tower)), c_(std::move(coeffs)) {
  if (c_.size() != tower_->dimension()) throw std::logic_error("tower element has wrong dimension");
}

TowerElement TowerElement::generator(TowerPtr tower, std::size_t index) {
  TowerElement e(tower, Rational(0));
  e.c_.at(std::size_t{1} << index) = 1;
  return e;
}

bool TowerElement::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

Rational TowerElement::rational_value() const {
  if (!is_rational()) throw std::logic_error("tower element is not rational");
  return c_[0];
}

TowerElement TowerElement::conjugate(std::size_t index) const {
  TowerElement out = *this;
  for (std::size_t mask = 0; mask < c_.size(); ++mask)
    if ((mask >> index) & 1u) out.c_[mask] = -out.c_[mask];
  return out;
}

TowerElement TowerElement::inverse() const {
  // Multiply by conjugates one generator at a time until the product is rational.
  TowerElement numerator(tower_, Rational(1));
  TowerElement norm = *this;
  for (std::size_t i = 0; i < tower_->rank(); ++i) {
    TowerElement conj = norm.conjugate(i);
    numerator *= conj;
    norm *= conj;
  }
  Rational n = norm.rational_value();
  if (sgn(n) == 0) throw DomainError("tower element is not invertible");
  Rational inv = 1 / n;
  return numerator * inv;
}

Complex TowerElement::embed() const {
  const auto& rad = tower_->radicands();
  std::vector<Complex> roots;
  for (const auto& d : rad) roots.push_back(std::sqrt(Complex(to_double(d), 0.0)));
  Complex total = 0.0;
  for (std::size_t mask = 0; mask < c_.size(); ++mask) {
    if (sgn(c_[mask]) == 0) continue;
    Complex term = c_[mask].get_d();
    for (std::size_t i = 0; i < rad.size(); ++i)
      if ((mask >> i) & 1u) term *= roots[i];
    total += term;
  }
  return total;
}

void TowerElement::require_same_tower(const TowerElement& rhs) const {
  if (tower_ != rhs.tower_ && tower_->radicands() != rhs.tower_->radicands())
    throw std::logic_error("arithmetic between elements of different towers");
}

TowerElement& TowerElement::operator+=(const TowerElement& rhs) {
  require_same_tower(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& rhs) {
  require_same_tower(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

TowerElement& TowerElement::operator*=(const TowerElement& rhs) {
  require_same_tower(rhs);
  const auto& rad = tower_->radicands();
  std::vector<Rational> out(c_.size(), Rational(0));
  for (std::size_t s = 0; s < c_.size(); ++s) {
    if (sgn(c_[s]) == 0) continue;
    for (std::size_t t = 0; t < c_.size(); ++t) {
      if (sgn(rhs.c_[t]) == 0) continue;
      Rational term = c_[s] * rhs.c_[t];
      std::size_t shared = s & t;
      for (std::size_t i = 0; i < rad.size(); ++i)
        if ((shared >> i) & 1u) term *= rad[i];
      out[s ^ t] += term;
    }
  }
  c_ = std::move(out);
  return *this;
}

TowerElement& TowerElement::operator*=(const Rational& rhs) {
  for (auto& c : c_) c *= rhs;
  return *this;
}

SatakeParams ExactSatakePoint::to_numeric() const {
  std::vector<Complex> m;
  for (const auto& e : mu) m.push_back(e.embed());
  return make_satake(degree, weight, prime, mu0.embed(), std::move(m));
}

namespace {

Integer gl2_discriminant(int weight, long prime, const Integer& a_p) {
  return a_p * a_p - 4 * ipow(prime, weight - 1);
}

struct Gsp4Split {
  Integer t1, t2;  // twice the pair sums
  Integer r1, r2;  // pair discriminants, scaled by 16
};

Gsp4Split split_gsp4(int weight, long prime, const Integer& lambda_p, const Integer& lambda_p2) {
  if (weight < 2) throw InputError("degree-2 weight must be at least 2");
  Integer norm = ipow(prime, 2 * weight - 3);
  Integer c2 = lambda_p * lambda_p - lambda_p2 - ipow(prime, 2 * weight - 4);
  Integer e = lambda_p * lambda_p - 4 * (c2 - 2 * norm);
  if (!is_perfect_square(e))
    throw InputError("degree-2 spin factor does not split into reciprocal quadratics over Q; "
                     "no exact Satake point available");
  Integer root = isqrt(e);
  Gsp4Split s;
  s.t1 = lambda_p + root;
  s.t2 = lambda_p - root;
  s.r1 = s.t1 * s.t1 - 16 * norm;
  s.r2 = s.t2 * s.t2 - 16 * norm;
  return s;
}

// sqrt(d) inside the tower; d must be a square or one of its radicands.
TowerElement tower_sqrt(const TowerPtr& tower, const Integer& d) {
  if (is_perfect_square(d)) return TowerElement(tower, Rational(isqrt(d)));
  const auto& rad = tower->radicands();
  auto it = std::find(rad.begin(), rad.end(), d);
  if (it == rad.end()) throw std::logic_error("radicand " + to_decimal(d) + " missing from tower");
  return TowerElement::generator(tower, static_cast<std::size_t>(it - rad.begin()));
}

void push_if_nonsquare(std::vector<Integer>& out, const Integer& d) {
  if (!is_perfect_square(d)) out.push_back(d);
}

}  // namespace

std::vector<Integer> gl2_radicands(int weight, long prime, const Integer& a_p) {
  std::vector<Integer> out;
  push_if_nonsquare(out, gl2_discriminant(weight, prime, a_p));
  return out;
}

std::vector<Integer> gsp4_radicands(int weight, long prime, const Integer& lambda_p, const Integer& lambda_p2) {
  Gsp4Split s = split_gsp4(weight, prime, lambda_p, lambda_p2);
  std::vector<Integer> out;
  push_if_nonsquare(out, s.r1);
  push_if_nonsquare(out, s.r2);
  return out;
}

TowerPtr make_tower(const std::vector<std::vector<Integer>>& radicand_sets) {
  std::vector<Integer> rad;
  for (const auto& set : radicand_sets)
    for (const auto& d : set)
      if (!is_perfect_square(d) && std::find(rad.begin(), rad.end(), d) == rad.end()) rad.push_back(d);
  return std::make_shared<const QuadraticTower>(std::move(rad));
}

ExactSatakePoint exact_gl2(const TowerPtr& tower, int weight, long prime, const Integer& a_p) {
  TowerElement root = tower_sqrt(tower, gl2_discriminant(weight, prime, a_p));
  TowerElement a(tower, Rational(a_p));
  Rational half(1, 2);
  TowerElement alpha0 = (a + root) * half;
  TowerElement alpha0_alpha1 = (a - root) * half;
  return ExactSatakePoint{1, weight, prime, alpha0, {alpha0_alpha1 / alpha0}};
}

ExactSatakePoint exact_gsp4(const TowerPtr& tower, int weight, long prime, const Integer& lambda_p,
                            const Integer& lambda_p2) {
  Gsp4Split s = split_gsp4(weight, prime, lambda_p, lambda_p2);
  Rational quarter(1, 4);
  TowerElement beta0 = (TowerElement(tower, Rational(s.t1)) + tower_sqrt(tower, s.r1)) * quarter;
  TowerElement beta0_beta1 = (TowerElement(tower, Rational(s.t2)) + tower_sqrt(tower, s.r2)) * quarter;
  TowerElement beta0_beta2 = (TowerElement(tower, Rational(s.t2)) - tower_sqrt(tower, s.r2)) * quarter;
  TowerElement inv = beta0.inverse();
  return ExactSatakePoint{2, weight, prime, beta0, {beta0_beta1 * inv, beta0_beta2 * inv}};
}

bool exact_normalization_holds(const ExactSatakePoint& pt) {
  TowerElement prod = pt.mu0 * pt.mu0;
  for (const auto& m : pt.mu) prod *= m;
  int exponent = pt.degree * pt.weight - pt.degree * (pt.degree + 1) / 2;
  if (!prod.is_rational()) return false;
  return prod.rational_value() == Rational(ipow(pt.prime, static_cast<unsigned long>(exponent)));
}

LocalFactor exact_spin_factor(const ExactSatakePoint& pt) {
  const TowerPtr& tower = pt.mu0.tower();
  std::vector<TowerElement> poly{TowerElement(tower, Rational(1))};
  for (unsigned mask = 0; mask < (1u << pt.degree); ++mask) {
    TowerElement root = pt.mu0;
    for (int i = 0; i < pt.degree; ++i)
      if ((mask >> i) & 1u) root *= pt.mu[i];
    poly.push_back(TowerElement(tower, Rational(0)));
    for (std::size_t j = poly.size() - 1; j >= 1; --j) poly[j] -= root * poly[j - 1];
  }
  LocalFactor::ExactCoeffs coeffs;
  for (const auto& c : poly) {
    Rational v = c.rational_value();
    if (v.get_den() != 1) throw std::logic_error("exact spin factor has a non-integral coefficient");
    coeffs.push_back(v.get_num());
  }
  return LocalFactor(pt.prime, spin_rep(pt.degree), std::move(coeffs));
}

}  // namespace spinor::exact
