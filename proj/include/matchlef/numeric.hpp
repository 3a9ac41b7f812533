#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace matchlef {

using Integer = mpz_class;
using Rational = mpq_class;

/// Decimal rendering; rationals print as "p" or "p/q" in lowest terms.
std::string to_decimal(const Integer& value);
std::string to_decimal(const Rational& value);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer pow(const Integer& base, unsigned long exponent);

}  // namespace matchlef
