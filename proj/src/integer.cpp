#include "spinor/integer.hpp"

#include "spinor/errors.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace spinor {

Integer ipow(long base, unsigned long exponent) {
  Integer result;
  Integer b = base;
  mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), exponent);
  return result;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

Integer parse_decimal(std::string_view text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (text.size() == start) throw InputError("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InputError("invalid integer literal '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

bool is_perfect_square(const Integer& value) {
  return sgn(value) >= 0 && mpz_perfect_square_p(value.get_mpz_t()) != 0;
}

Integer isqrt(const Integer& value) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), value.get_mpz_t());
  return r;
}

double to_double(const Integer& value) {
  if (sgn(value) == 0) return 0.0;
  if (log2_abs(value) >= 1024.0)
    return sgn(value) > 0 ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
  return value.get_d();
}

double log2_abs(const Integer& value) {
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp2);
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace spinor
