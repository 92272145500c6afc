#include "spinor/local_factor.hpp"

#include "spinor/errors.hpp"
#include "spinor/linalg.hpp"

#include <cmath>

namespace spinor {

namespace {

constexpr double kZeroThreshold = 1e-13;

template <typename Coeffs>
void require_unit_constant(const Coeffs& c) {
  if (c.empty()) throw InputError("local factor has no coefficients");
  using T = typename Coeffs::value_type;
  if (!(c[0] == T(1))) throw InputError("local factor must have constant term 1");
}

template <typename T>
std::vector<T> tensor_coefficients(const std::vector<T>& a, const std::vector<T>& b) {
  auto ca = linalg::reversed_companion(a);
  auto cb = linalg::reversed_companion(b);
  return linalg::characteristic_polynomial(linalg::kronecker(ca, cb));
}

}  // namespace

LocalFactor::LocalFactor(long prime, std::string rep, ExactCoeffs coeffs)
    : prime_(prime), rep_(std::move(rep)), coeffs_(std::move(coeffs)) {
  require_unit_constant(std::get<ExactCoeffs>(coeffs_));
}

LocalFactor::LocalFactor(long prime, std::string rep, NumericCoeffs coeffs)
    : prime_(prime), rep_(std::move(rep)), coeffs_(std::move(coeffs)) {
  const auto& c = std::get<NumericCoeffs>(coeffs_);
  if (c.empty()) throw InputError("local factor has no coefficients");
  if (std::abs(c[0] - 1.0) > 1e-12) throw InputError("local factor must have constant term 1");
}

int LocalFactor::degree() const {
  return std::visit([](const auto& c) { return static_cast<int>(c.size()) - 1; }, coeffs_);
}

const LocalFactor::ExactCoeffs& LocalFactor::exact() const {
  if (!is_exact()) throw InputError("local factor is numeric, exact coefficients requested");
  return std::get<ExactCoeffs>(coeffs_);
}

const LocalFactor::NumericCoeffs& LocalFactor::numeric() const {
  if (is_exact()) throw InputError("local factor is exact, numeric coefficients requested");
  return std::get<NumericCoeffs>(coeffs_);
}

LocalFactor::NumericCoeffs LocalFactor::as_complex() const {
  if (!is_exact()) return numeric();
  NumericCoeffs out;
  for (const auto& c : exact()) out.emplace_back(to_double(c), 0.0);
  return out;
}

std::string spin_rep(int n) { return "spin-" + std::to_string(n); }
std::string standard_rep(int n) { return "standard-" + std::to_string(n); }

LocalFactor::NumericCoeffs expand_inverse_roots(const std::vector<Complex>& roots) {
  LocalFactor::NumericCoeffs poly{1.0};
  for (const auto& r : roots) {
    poly.push_back(0.0);
    for (std::size_t j = poly.size() - 1; j >= 1; --j) poly[j] -= r * poly[j - 1];
  }
  return poly;
}

std::vector<Complex> spin_inverse_roots(const SatakeParams& sp) {
  sp.validate();
  std::vector<Complex> roots;
  for (unsigned mask = 0; mask < (1u << sp.degree); ++mask) {
    Complex r = sp.mu0;
    for (int i = 0; i < sp.degree; ++i)
      if ((mask >> i) & 1u) r *= sp.mu[i];
    roots.push_back(r);
  }
  return roots;
}

LocalFactor spin_local_factor(const SatakeParams& sp) {
  return LocalFactor(sp.prime, spin_rep(sp.degree), expand_inverse_roots(spin_inverse_roots(sp)));
}

LocalFactor standard_local_factor(const SatakeParams& sp) {
  sp.validate();
  std::vector<Complex> roots{1.0};
  for (const auto& m : sp.mu) {
    roots.push_back(m);
    roots.push_back(1.0 / m);
  }
  return LocalFactor(sp.prime, standard_rep(sp.degree), expand_inverse_roots(roots));
}

LocalFactor gl2_factor_exact(int weight, long prime, const Integer& a_p) {
  return LocalFactor(prime, spin_rep(1), LocalFactor::ExactCoeffs{1, -a_p, ipow(prime, weight - 1)});
}

LocalFactor gsp4_spin_factor_exact(int weight, long prime, const Integer& lambda_p, const Integer& lambda_p2) {
  if (weight < 2) throw InputError("degree-2 weight must be at least 2");
  Integer p_top = ipow(prime, 2 * weight - 3);
  LocalFactor::ExactCoeffs c{
      1,
      -lambda_p,
      lambda_p * lambda_p - lambda_p2 - ipow(prime, 2 * weight - 4),
      -lambda_p * p_top,
      ipow(prime, 4 * weight - 6),
  };
  return LocalFactor(prime, spin_rep(2), std::move(c));
}

LocalFactor tensor_local_factor(const LocalFactor& a, const LocalFactor& b) {
  if (a.prime() != b.prime())
    throw InputError("tensor of local factors at different primes (" + std::to_string(a.prime()) + ", " +
                     std::to_string(b.prime()) + ")");
  if (a.is_exact() != b.is_exact()) throw InputError("tensor of exact and numeric local factors");
  if (a.is_exact()) return LocalFactor(a.prime(), kTensorRep, tensor_coefficients(a.exact(), b.exact()));
  return LocalFactor(a.prime(), kTensorRep, tensor_coefficients(a.numeric(), b.numeric()));
}

namespace {

struct ValueWithScale {
  Complex value;
  double scale;  // sum of |term|
};

ValueWithScale value_with_scale(const LocalFactor& f, Complex s) {
  const double log2p = std::log2(static_cast<double>(f.prime()));
  const double lnp = std::log(static_cast<double>(f.prime()));
  Complex total = 0.0;
  double scale = 0.0;
  if (f.is_exact()) {
    const auto& c = f.exact();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (sgn(c[j]) == 0) continue;
      double log2_mag = log2_abs(c[j]) - static_cast<double>(j) * s.real() * log2p;
      if (log2_mag < -1100.0) continue;
      double mag = std::exp2(log2_mag);
      Complex term = std::polar(mag, -static_cast<double>(j) * s.imag() * lnp);
      total += sgn(c[j]) > 0 ? term : -term;
      scale += mag;
    }
  } else {
    Complex x = std::exp(-s * lnp);
    Complex power = 1.0;
    for (const auto& c : f.numeric()) {
      Complex term = c * power;
      total += term;
      scale += std::abs(term);
      power *= x;
    }
  }
  return {total, scale};
}

}  // namespace

Complex factor_value(const LocalFactor& f, Complex s) { return value_with_scale(f, s).value; }

Complex evaluate(const LocalFactor& f, Complex s) {
  auto [value, scale] = value_with_scale(f, s);
  if (std::abs(value) <= kZeroThreshold * scale)
    throw DomainError("local factor at p=" + std::to_string(f.prime()) + " vanishes at s=(" +
                      std::to_string(s.real()) + "," + std::to_string(s.imag()) + "): L_p has a pole");
  return 1.0 / value;
}

}  // namespace spinor
