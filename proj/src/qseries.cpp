#include "spinor/qseries.hpp"

#include "spinor/errors.hpp"

#include <algorithm>

namespace spinor {

QSeries::QSeries(std::size_t order) : num_(order + 1) {}

QSeries::QSeries(std::vector<Integer> numerators, Integer denominator)
    : num_(std::move(numerators)), den_(std::move(denominator)) {
  if (num_.empty()) num_.resize(1);
  if (den_ == 0) throw InputError("q-series denominator is zero");
  normalize();
}

void QSeries::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

Rational QSeries::coefficient(std::size_t n) const {
  if (n > order()) throw InputError("coefficient index beyond truncation order");
  Rational r(num_[n], den_);
  r.canonicalize();
  return r;
}

Integer QSeries::integer_coefficient(std::size_t n) const {
  Rational r = coefficient(n);
  if (r.get_den() != 1) throw InputError("q-series coefficient is not integral");
  return r.get_num();
}

QSeries QSeries::truncated(std::size_t order) const {
  std::vector<Integer> num(num_.begin(), num_.begin() + std::min(order, this->order()) + 1);
  return QSeries(std::move(num), den_);
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  std::size_t n = std::min(order(), rhs.order());
  num_.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) num_[i] = num_[i] * rhs.den_ + rhs.num_[i] * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  QSeries neg = rhs;
  for (auto& c : neg.num_) c = -c;
  return *this += neg;
}

QSeries& QSeries::operator*=(const Rational& scalar) {
  for (auto& c : num_) c *= scalar.get_num();
  den_ *= scalar.get_den();
  normalize();
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Integer> out(n + 1);
  // Iterate over the nonzero terms of the sparser factor.
  auto nonzeros = [n](const QSeries& s) {
    return std::count_if(s.num_.begin(), s.num_.begin() + n + 1,
                         [](const Integer& c) { return sgn(c) != 0; });
  };
  const QSeries& sparse = nonzeros(a) <= nonzeros(b) ? a : b;
  const QSeries& dense = &sparse == &a ? b : a;
  for (std::size_t i = 0; i <= n; ++i) {
    const Integer& c = sparse.num_[i];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      mpz_addmul(out[i + j].get_mpz_t(), c.get_mpz_t(), dense.num_[j].get_mpz_t());
  }
  return QSeries(std::move(out), a.den_ * b.den_);
}

Rational product_coefficient(const QSeries& a, const QSeries& b, std::size_t n) {
  if (n > a.order() || n > b.order()) throw InputError("product coefficient beyond truncation order");
  Integer sum = 0;
  for (std::size_t i = 0; i <= n; ++i)
    mpz_addmul(sum.get_mpz_t(), a.numerators()[i].get_mpz_t(), b.numerators()[n - i].get_mpz_t());
  Rational r(sum, a.denominator() * b.denominator());
  r.canonicalize();
  return r;
}

}  // namespace spinor
