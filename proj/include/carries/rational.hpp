#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace carries {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical (reduced, positive denominator) rational num/den.
Rational make_rational(long num, long den = 1);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// Fractional part <x> = x - floor(x), always in [0, 1).
Rational fractional_part(const Rational& x);

bool is_integer(const Rational& x);

/// Converts an integral rational to long; throws std::domain_error otherwise.
long to_long(const Rational& x);

Rational pow(const Rational& base, unsigned long exponent);

/// C(a, k) for integer a >= 0; zero when k > a. Negative a is a domain error.
Integer binomial(const Integer& a, unsigned long k);
Integer binomial(long a, unsigned long k);

Integer factorial(unsigned long k);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& x);

/// Parses "NUM" or "NUM/DEN" (optional sign on NUM). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Decimal rendering with a fixed number of fractional digits (CLI display only).
std::string to_decimal(const Rational& x, int digits);

}  // namespace carries
