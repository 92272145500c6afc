#pragma once

#include <cstddef>
#include <vector>

namespace spinor::linalg {

/// Dense row-major square matrix over any commutative ring type.
template <typename T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n = 0) : n_(n), data_(n * n, T(0)) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

 private:
  std::size_t n_;
  std::vector<T> data_;
};

/// Companion matrix whose characteristic polynomial is the reversal
/// x^d + c1 x^(d-1) + ... + cd of 1 + c1 X + ... + cd X^d, so that
/// det(1 - C X) reproduces the input. coeffs[0] must be 1.
template <typename T>
SquareMatrix<T> reversed_companion(const std::vector<T>& coeffs) {
  std::size_t d = coeffs.size() - 1;
  SquareMatrix<T> c(d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = T(1);
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -coeffs[d - i];
  return c;
}

template <typename T>
SquareMatrix<T> kronecker(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  std::size_t na = a.size(), nb = b.size();
  SquareMatrix<T> out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      if (a(i, j) == T(0)) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = T(a(i, j) * b(k, l));
    }
  return out;
}

/// Characteristic polynomial det(x - M), leading coefficient first, by
/// Berkowitz's division-free algorithm. Read as a polynomial in X the same
/// vector is det(1 - M X).
template <typename T>
std::vector<T> characteristic_polynomial(const SquareMatrix<T>& m) {
  std::size_t n = m.size();
  std::vector<T> poly{T(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading r x r block S, column C = m(0..r-1, r), row R = m(r, 0..r-1).
    std::vector<T> toeplitz(r + 2, T(0));
    toeplitz[0] = T(1);
    toeplitz[1] = T(-m(r, r));
    std::vector<T> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
    for (std::size_t j = 0; j < r; ++j) {
      // toeplitz[j+2] = -R S^j C
      T dot(0);
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * col[i];
      toeplitz[j + 2] = T(-dot);
      std::vector<T> next(r, T(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) next[i] += m(i, k) * col[k];
      col = std::move(next);
    }
    std::vector<T> updated(r + 2, T(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j) updated[i] += toeplitz[i - j] * poly[j];
    poly = std::move(updated);
  }
  return poly;
}

}  // namespace spinor::linalg
