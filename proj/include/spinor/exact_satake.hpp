#pragma once

#include "spinor/integer.hpp"
#include "spinor/local_factor.hpp"
#include "spinor/satake.hpp"

#include <memory>
#include <vector>

namespace spinor::exact {

/// The ring Q[x_1..x_r] / (x_i^2 - d_i) for nonsquare integers d_i. When the
/// d_i are multiplicatively independent this is the multiquadratic field
/// Q(sqrt d_1, ..., sqrt d_r); otherwise it is still a commutative ring in
/// which every symmetric expression of the Satake parameters evaluates
/// correctly, which is all the exact spin route needs.
class QuadraticTower {
 public:
  explicit QuadraticTower(std::vector<Integer> radicands);

  std::size_t rank() const { return radicands_.size(); }
  std::size_t dimension() const { return std::size_t{1} << rank(); }
  const std::vector<Integer>& radicands() const { return radicands_; }

 private:
  std::vector<Integer> radicands_;
};

using TowerPtr = std::shared_ptr<const QuadraticTower>;

/// Element sum_S c_S prod_{i in S} x_i, indexed by bitmask S.
class TowerElement {
 public:
  TowerElement(TowerPtr tower, const Rational& value);
  TowerElement(TowerPtr tower, std::vector<Rational> coeffs);

  static TowerElement generator(TowerPtr tower, std::size_t index);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_rational() const;
  // Throws std::logic_error unless is_rational().
  Rational rational_value() const;

  // x_i -> -x_i.
  TowerElement conjugate(std::size_t index) const;
  // Throws DomainError when the norm to Q vanishes.
  TowerElement inverse() const;

  // Image under x_i -> principal sqrt(d_i).
  Complex embed() const;

  TowerElement& operator+=(const TowerElement& rhs);
  TowerElement& operator-=(const TowerElement& rhs);
  TowerElement& operator*=(const TowerElement& rhs);
  TowerElement& operator*=(const Rational& rhs);

  friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
  friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
  friend TowerElement operator*(TowerElement a, const TowerElement& b) { return a *= b; }
  friend TowerElement operator*(TowerElement a, const Rational& b) { return a *= b; }
  friend TowerElement operator/(const TowerElement& a, const TowerElement& b) { return a * b.inverse(); }

 private:
  void require_same_tower(const TowerElement& rhs) const;

  TowerPtr tower_;
  std::vector<Rational> c_;
};

/// Satake point with coordinates in a quadratic tower.
struct ExactSatakePoint {
  int degree = 1;
  int weight = 0;
  long prime = 2;
  TowerElement mu0;
  std::vector<TowerElement> mu;

  SatakeParams to_numeric() const;
};

/// Radicands that a degree-1 point from (k, p, a_p) needs; empty when the
/// Hecke polynomial splits over Q.
std::vector<Integer> gl2_radicands(int weight, long prime, const Integer& a_p);

/// Radicands for a degree-2 point from (k, p, lambda_p, lambda_p2). Throws
/// InputError unless the spin quartic splits into its two reciprocal
/// quadratics over Q (true for Saito-Kurokawa lifts); a general degree-2
/// eigenform needs a larger splitting field and has no exact point here.
std::vector<Integer> gsp4_radicands(int weight, long prime, const Integer& lambda_p, const Integer& lambda_p2);

/// Smallest tower containing all listed radicands (squares and repeats dropped).
TowerPtr make_tower(const std::vector<std::vector<Integer>>& radicand_sets);

ExactSatakePoint exact_gl2(const TowerPtr& tower, int weight, long prime, const Integer& a_p);
ExactSatakePoint exact_gsp4(const TowerPtr& tower, int weight, long prime, const Integer& lambda_p,
                            const Integer& lambda_p2);

/// mu0^2 prod mu_i == p^(nk - n(n+1)/2), exactly.
bool exact_normalization_holds(const ExactSatakePoint& pt);

/// Spin factor expanded over the tower. Throws std::logic_error if a
/// coefficient fails to be a rational integer, which would mean the point is
/// not a Galois-stable Satake class.
LocalFactor exact_spin_factor(const ExactSatakePoint& pt);

}  // namespace spinor::exact
