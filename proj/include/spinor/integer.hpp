#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spinor {

using Integer = mpz_class;
using Rational = mpq_class;

Integer ipow(long base, unsigned long exponent);
Integer ipow(const Integer& base, unsigned long exponent);

std::string to_decimal(const Integer& value);
// Throws InputError on anything but an optional sign followed by digits.
Integer parse_decimal(std::string_view text);

bool is_perfect_square(const Integer& value);
Integer isqrt(const Integer& value);

// Nearest double, or +/-inf when the value exceeds the double range.
double to_double(const Integer& value);
// log2|value|, computed without overflow. value must be nonzero.
double log2_abs(const Integer& value);

bool is_prime(long n);

}  // namespace spinor
