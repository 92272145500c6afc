#pragma once

#include "spinor/integer.hpp"

#include <cstddef>
#include <vector>

namespace spinor {

/// Truncated q-expansion sum_{n<=N} c(n) q^n with exact rational coefficients,
/// stored as integer numerators over one positive common denominator kept in
/// lowest terms. Products are truncated at the smaller order of the factors.
class QSeries {
 public:
  explicit QSeries(std::size_t order = 0);
  QSeries(std::vector<Integer> numerators, Integer denominator = 1);

  std::size_t order() const { return num_.size() - 1; }
  const Integer& denominator() const { return den_; }
  const std::vector<Integer>& numerators() const { return num_; }

  Rational coefficient(std::size_t n) const;
  // Throws InputError when c(n) is not an integer.
  Integer integer_coefficient(std::size_t n) const;
  bool is_integral() const { return den_ == 1; }

  QSeries truncated(std::size_t order) const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const Rational& scalar);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

 private:
  void normalize();

  std::vector<Integer> num_;
  Integer den_ = 1;
};

// c(n) of a*b without forming the whole product.
Rational product_coefficient(const QSeries& a, const QSeries& b, std::size_t n);

}  // namespace spinor
